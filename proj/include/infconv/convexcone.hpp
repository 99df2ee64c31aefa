#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "infconv/rational.hpp"
#include "infconv/report.hpp"

namespace infconv {

// Piecewise-linear convex Katetov function on the line. Tail slopes are
// implicitly -1 (left of the first breakpoint) and +1 (right of the last);
// interior slopes are strictly increasing and strictly inside (-1, 1).
// Membership in the Katetov class reduces to c_plus + c_minus >= 0 where
// c_plus = v_last - x_last and c_minus = v_first + x_first (the asymptotic
// intercepts); the tests certify this reduction against a grid oracle.
class PLKatetovFn {
 public:
  // Canonicalizes (coalesces collinear breakpoints, folds +-1 slopes into
  // the tails) and validates every invariant; throws InvariantViolation.
  explicit PLKatetovFn(std::vector<std::pair<Rat, Rat>> breakpoints);

  // gamma(x0) = |. - x0|, the single-breakpoint element.
  static PLKatetovFn gamma(const Rat& x0);

  const std::vector<std::pair<Rat, Rat>>& breakpoints() const { return bp_; }
  Rat c_plus() const;
  Rat c_minus() const;
  Rat katetov_margin() const { return c_plus() + c_minus(); }
  Rat operator()(const Rat& x) const;
  Rat min_value() const;
  std::vector<Rat> slopes() const;
  bool operator==(const PLKatetovFn&) const = default;

 private:
  std::vector<std::pair<Rat, Rat>> bp_;
};

// Exact inf-convolution: epigraph Minkowski sum, i.e. the slope segments of
// both operands merged in nondecreasing slope order.
PLKatetovFn pl_infconv(const PLKatetovFn& f, const PLKatetovFn& g);

// lambda > 0: breakpoints scale to (lambda x, lambda v); lambda = 0 gives
// gamma(0). Negative lambda is rejected here (see banach_scale_gamma).
PLKatetovFn epi_scale(const Rat& lambda, const PLKatetovFn& f);

// sup |f-g|; attained at a breakpoint of either operand or as one of the two
// tail constants.
Rat pl_dinf(const PLKatetovFn& f, const PLKatetovFn& g);

// Signed scaling on Kuratowski elements: lambda * gamma(x) = gamma(lambda x),
// extended by lambda * gamma(x) := (-lambda) * gamma(-x) for lambda < 0.
PLKatetovFn banach_scale_gamma(const Rat& lambda, const Rat& x);

// |||f||| = d_inf(f, gamma(0)).
Rat banach_norm(const PLKatetovFn& f);

// Cone axioms on seeded random samples: 1*c = c, 0*c = gamma(0),
// (a+b)*c = (a*c)+(b*c), lambda*(c+c') = (lambda*c)+(lambda*c').
TheoremReport verify_cone_axioms(int samples, std::uint64_t seed);

struct FixedPointResult {
  PLKatetovFn fixed;
  int iterations = 0;
  Rat residual;            // pl_dinf(L(fixed), fixed)
  std::vector<Rat> steps;  // successive iterate distances
  bool converged = false;
};

// Iterates L(f) = (lambda * f) + g from gamma(0) and stops once the step
// size is <= tol * (1 - lambda), which bounds the distance to the fixed
// point by tol (standard a-posteriori contraction estimate).
FixedPointResult fixed_point_solve(const Rat& lambda, const PLKatetovFn& g, const Rat& tol,
                                   int max_iterations = 10000);

// Phi(f) = f o T^{-1} for T = identity or reflection, the isometric linear
// automorphisms of the line; checks the cone-isomorphism equalities on a
// seeded random suite.
TheoremReport verify_cone_iso(bool reflection, int samples, std::uint64_t seed);

}  // namespace infconv
