#include <chrono>
#include <cstdint>
#include <random>

#include "infconv/minplus_kernels.hpp"
#include "infconv/zline.hpp"

namespace infconv {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Fixed-point instances: stored values are numerators over kDen.
constexpr long kDen = 16;

std::vector<std::int64_t> synth_convex(std::mt19937_64& rng, int n) {
  std::vector<std::int64_t> b(n);
  std::int64_t slope = -(std::int64_t)(rng() % 64) - 1;
  std::int64_t cur = (std::int64_t)(rng() % 4096) + 64 * (std::int64_t)n;
  for (int i = 0; i < n; ++i) {
    b[i] = cur;
    cur += slope;
    slope += (std::int64_t)(rng() % 3);  // nonnegative second differences
  }
  const std::int64_t lo = *std::min_element(b.begin(), b.end());
  if (lo < 0)
    for (auto& x : b) x -= lo;
  return b;
}

std::vector<std::int64_t> synth_arbitrary(std::mt19937_64& rng, int n) {
  std::vector<std::int64_t> a(n);
  for (int i = 0; i < n; ++i) a[i] = (std::int64_t)(rng() % (1u << 20));
  return a;
}

// Exact per-index recomputation used to certify sampled outputs.
Rat exact_at(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
             std::size_t k) {
  const std::size_t n = a.size(), m = b.size();
  const std::size_t jlo = k >= m ? k - m + 1 : 0;
  const std::size_t jhi = std::min(k, n - 1);
  Rat best = rat(a[jlo], kDen) + rat(b[k - jlo], kDen);
  for (std::size_t j = jlo + 1; j <= jhi; ++j) {
    Rat cand = rat(a[j], kDen) + rat(b[k - j], kDen);
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace

BenchReport bench_minplus(int n, MinplusMode mode, std::uint64_t seed) {
  if (n < 1) throw InvariantViolation("bench: n must be >= 1");
  BenchReport rep;
  rep.n = n;
  rep.mode = to_string(mode);
  rep.seed = seed;

  std::mt19937_64 rng(seed);
  const std::vector<std::int64_t> b = synth_convex(rng, n);
  const std::vector<std::int64_t> a =
      mode == MinplusMode::Merge ? synth_convex(rng, n) : synth_arbitrary(rng, n);

  const auto t0 = Clock::now();
  std::vector<std::int64_t> naive = minplus_naive(a, b);
  rep.naive_ms = ms_since(t0);
  rep.naive_ops = (std::uint64_t)n * (std::uint64_t)n;

  std::vector<std::int64_t> fast;
  const auto t1 = Clock::now();
  switch (mode) {
    case MinplusMode::Naive:
      fast = minplus_naive(a, b);
      rep.fast_ops = rep.naive_ops;
      break;
    case MinplusMode::Merge:
      fast = convex_minplus_merge(a, b);
      rep.fast_ops = (std::uint64_t)fast.size();
      break;
    case MinplusMode::Smawk: {
      std::uint64_t probes = 0;
      fast = smawk_minplus(a, b, &probes);
      rep.fast_ops = probes;
      break;
    }
  }
  rep.fast_ms = ms_since(t1);
  rep.speedup = rep.fast_ms > 0 ? rep.naive_ms / rep.fast_ms : 1.0;

  if (fast != naive) throw InvariantViolation("bench: fast kernel disagrees with naive");

  // Exact-rational certification on a random subsample of outputs.
  rep.verified_points = (int)std::min<std::size_t>(16, fast.size());
  rep.verified = true;
  for (int s = 0; s < rep.verified_points; ++s) {
    const std::size_t k = rng() % fast.size();
    if (rat(fast[k], kDen) != exact_at(a, b, k)) {
      rep.verified = false;
      break;
    }
  }
  return rep;
}

}  // namespace infconv
