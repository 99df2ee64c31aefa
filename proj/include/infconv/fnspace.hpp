#pragma once

#include <optional>
#include <vector>

#include "infconv/magma.hpp"
#include "infconv/rational.hpp"

namespace infconv {

// Extended-rational-valued function on the carrier {0,...,n-1}.
// Must take at least one finite value (nonempty domain).
struct FnOnX {
  std::vector<ExtRat> values;

  FnOnX() = default;
  explicit FnOnX(std::vector<ExtRat> v) : values(std::move(v)) {}
  static FnOnX constant(int n, const Rat& c);

  int size() const { return (int)values.size(); }
  const ExtRat& operator[](int i) const { return values[i]; }
  ExtRat& operator[](int i) { return values[i]; }
  bool all_finite() const;
  bool operator==(const FnOnX&) const = default;

  void validate() const;  // nonempty domain
};

// delta_a = d(a, .)
FnOnX kuratowski(const MetricTable& metric, int a);
FnOnX kuratowski(const FiniteMetricMagma& m, int a);

// Finite values with |f(x)-f(y)| <= d(x,y).
bool is_lip1(const MetricTable& metric, const FnOnX& f);
bool is_lip1(const FiniteMetricMagma& m, const FnOnX& f);

// All values >= 0 (+inf counts as nonnegative).
bool is_positive(const FnOnX& f);

// Both chains: |f(x)-f(y)| <= d(x,y) <= f(x)+f(y).
bool is_katetov(const MetricTable& metric, const FnOnX& f);
bool is_katetov(const FiniteMetricMagma& m, const FnOnX& f);

// sup |f-g|; requires finite-valued inputs of equal length.
Rat d_inf(const FnOnX& f, const FnOnX& g);

// sup |f-g| / (1 + |f-g|)
Rat rho(const FnOnX& f, const FnOnX& g);

// rho(f - inf f, g - inf g) + |inf f - inf g|
Rat rho_tilde(const FnOnX& f, const FnOnX& g);

Rat min_value(const FnOnX& f);
std::vector<int> argmin_set(const FnOnX& f);

// The unique global minimizer, or nullopt when the minimum is tied. On a
// finite carrier this is exactly the strong-minimum notion.
std::optional<int> strong_min(const FnOnX& f);

FnOnX add_const(const FnOnX& f, const Rat& c);

// f_eps = (1-eps) f + eps delta_xstar. Requires f in Lip1, eps in (0,1) and
// xstar in argmin(f); the result has a strong minimum at xstar and satisfies
// d_inf(f_eps, f) = eps * d_inf(delta_xstar, f) exactly.
FnOnX perturb_to_strong_min(const FiniteMetricMagma& m, const FnOnX& f, int xstar,
                            const Rat& eps);

}  // namespace infconv
