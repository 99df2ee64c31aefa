#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "infconv/generate.hpp"
#include "infconv/infconv.hpp"
#include "infconv/report.hpp"

namespace infconv {

// Which monoid the unit audit runs in. Units of Lip1 are gamma(y) + c for
// arbitrary rational c; units of Lip1+ are exactly the Kuratowski image
// (c = 0).
enum class UnitSpace { Lip1, Lip1Plus };

struct UnitCertificate {
  int base = 0;   // y with f = gamma(y) + shift
  Rat shift;
  FnOnX inverse;  // gamma(y^{-1}) - shift, verified by actual convolution
};

// Canonical-form detection: f is a unit iff f - gamma(y) is constant for
// some y. Requires a metric-invariant group carrier.
std::optional<UnitCertificate> is_unit(const FiniteMetricMagma& m, const FnOnX& f,
                                       UnitSpace space = UnitSpace::Lip1);

// gamma(a) + gamma(b) = gamma(a.b) for all pairs, plus the converse link
// between closure of the Kuratowski image and the Latin-square property.
TheoremReport kuratowski_closure(const FiniteMetricMagma& m);

// Monoid probes for Lip1+: identity element gamma(e) on a generated family
// and associativity on all delta triples. On a non-associative quasigroup
// the report carries a verified counterexample triple instead.
TheoremReport verify_int2(const FiniteMetricMagma& m, const std::vector<FnOnX>& extra = {});

struct MorphismReport {
  long long pairs_checked = 0;
  std::vector<std::string> violations;
  bool holds = false;
};

// argmin(f+g) = argmin(f).argmin(g) for the given pair, plus the commutative
// diagram argmin(gamma(x)) = x over the whole carrier.
MorphismReport argmin_morphism(const FiniteMetricMagma& m, const FnOnX& f, const FnOnX& g);

// f -> f o T^{-1} for a carrier bijection T.
struct IsoTransformer {
  std::vector<int> map;  // T
  std::vector<int> inv;  // T^{-1}
  FnOnX operator()(const FnOnX& f) const;
};

// Verifies T is a group isomorphism and isometry, then checks that the
// induced transformer respects + and d_inf on Kuratowski elements and a
// seeded random Katetov suite.
std::pair<IsoTransformer, TheoremReport> canonical_iso(const FiniteMetricMagma& m1,
                                                       const FiniteMetricMagma& m2,
                                                       const std::vector<int>& t,
                                                       std::uint64_t seed = gen::kDefaultSeed);

struct CancellationTriple {
  FnOnX f, h, g;
};

// Searches grid-valued 1-Lipschitz functions for f != h with f+g = h+g.
// Any returned triple has been re-verified through inf_conv.
std::optional<CancellationTriple> cancellation_search(const FiniteMetricMagma& m,
                                                      const std::vector<Rat>& grid);

struct FactorizationWitness {
  FnOnX phi, psi;
  TheoremReport report;
};

// Constructive witness phi = f + gamma(b^{-1}), psi = gamma(b) for the
// factorization identity f(a.b) = inf over phi+psi=f of phi(a)+psi(b).
FactorizationWitness factorization_witness(const FiniteMetricMagma& m, const FnOnX& f, int a,
                                           int b, std::uint64_t seed = gen::kDefaultSeed);

// All functions with every value drawn from `grid`, filtered to 1-Lipschitz.
std::vector<FnOnX> grid_lip1_functions(const FiniteMetricMagma& m, const std::vector<Rat>& grid);

}  // namespace infconv
