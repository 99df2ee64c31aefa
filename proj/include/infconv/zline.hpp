#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "infconv/rational.hpp"

namespace infconv {

// One period of a p-periodic sequence.
struct CyclicSeq {
  std::vector<Rat> values;

  int p() const { return (int)values.size(); }
  bool operator==(const CyclicSeq&) const = default;
};

// Sequence on Z equal to `dflt` outside finitely many exceptions.
// Exceptions are nonredundant: no stored value equals the default.
struct CofiniteSeq {
  Rat dflt;
  std::map<long long, Rat> exc;

  Rat at(long long i) const;
  void normalize();
  bool operator==(const CofiniteSeq&) const = default;
};

// Membership in l^inf_dis: nonnegative values with oscillation <= 1.
bool in_linf_dis(const CyclicSeq& u);
bool in_linf_dis(const CofiniteSeq& u);

CyclicSeq cyclic_delta(int p, int k);
CofiniteSeq cofinite_delta(long long k);

enum class MinplusMode { Naive, Merge, Smawk };
MinplusMode minplus_mode_from_string(const std::string& s);
std::string to_string(MinplusMode mode);

// (u+v)_n = min_{k in [0,p)} u_{n-k} + v_k, indices mod p. The fast modes
// reduce to a straight-line convolution against a doubled period and require
// the corresponding convexity precondition on the linearized operands.
CyclicSeq cyclic_minplus(const CyclicSeq& u, const CyclicSeq& v,
                         MinplusMode mode = MinplusMode::Naive);

// (u+v)_n = inf_{k in Z} u_{n-k} + v_k. Requires both operands in l^inf_dis;
// the infimum is then attained on a finite candidate set and the result is
// again cofinite.
CofiniteSeq z_minplus(const CofiniteSeq& u, const CofiniteSeq& v);

struct BenchReport {
  int n = 0;
  std::string mode;
  std::uint64_t seed = 0;
  double fast_ms = 0.0;
  double naive_ms = 0.0;
  double speedup = 1.0;
  std::uint64_t fast_ops = 0;
  std::uint64_t naive_ops = 0;
  bool verified = false;  // exact-rational agreement on sampled outputs
  int verified_points = 0;
};

// Times one synthesized instance of length n in machine-integer fixed point
// (values are numerators over a common denominator) and re-verifies a random
// subsample of outputs in exact rational arithmetic.
BenchReport bench_minplus(int n, MinplusMode mode, std::uint64_t seed);

}  // namespace infconv
