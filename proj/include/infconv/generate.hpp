#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "infconv/convexcone.hpp"
#include "infconv/fnspace.hpp"
#include "infconv/magma.hpp"
#include "infconv/zline.hpp"

namespace infconv::gen {

inline constexpr std::uint64_t kDefaultSeed = 12345;

// Deterministic source of exact random rationals. Draws go through raw
// engine output only, so sequences are reproducible for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  long below(long k) { return k <= 1 ? 0 : (long)(eng_() % (std::uint64_t)k); }
  // Uniform over {lo + t(hi-lo)/steps : t = 0..steps}.
  Rat rat_in(const Rat& lo, const Rat& hi, long steps = 16) {
    const long t = below(steps + 1);
    return lo + (hi - lo) * rat(t, steps);
  }

 private:
  std::mt19937_64 eng_;
};

// Random metric: symmetric rational weights repaired into a metric by
// min-plus closure (all-pairs shortest paths).
MetricTable random_metric(Rng& rng, int n);

// Incremental interval sampling; always succeeds.
FnOnX random_lip1(Rng& rng, const MetricTable& metric, bool nonneg = false);
FnOnX random_katetov(Rng& rng, const MetricTable& metric);

// Katetov values on a subset, and a random 1-Lipschitz extension of given
// subset values to the whole carrier.
std::vector<Rat> random_katetov_on_subset(Rng& rng, const MetricTable& metric,
                                          const std::vector<int>& subset);
FnOnX random_lip1_extension(Rng& rng, const MetricTable& metric, const std::vector<int>& subset,
                            const std::vector<Rat>& values);

std::vector<int> random_subset(Rng& rng, int n, int k);

CyclicSeq random_linf_cyclic(Rng& rng, int p);
CofiniteSeq random_linf_cofinite(Rng& rng, int max_exceptions);

PLKatetovFn random_pl(Rng& rng, int max_segments);

std::vector<Rat> random_convex_rational_seq(Rng& rng, int len);
std::vector<Rat> random_rational_seq(Rng& rng, int len);

}  // namespace infconv::gen
