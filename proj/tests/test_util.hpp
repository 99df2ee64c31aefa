#pragma once

#include <initializer_list>
#include <vector>

#include "infconv/fnspace.hpp"
#include "infconv/generate.hpp"

namespace testutil {

using infconv::FnOnX;
using infconv::MetricTable;
using infconv::Rat;

inline FnOnX fn(std::initializer_list<const char*> vals) {
  FnOnX f;
  for (const char* s : vals) f.values.push_back(infconv::ext_from_string(s));
  return f;
}

// Invariant metric on Z/nZ: d(i,j) = w((i-j) mod n) with symmetric weights
// in [1,2], so the triangle inequality holds automatically.
inline MetricTable cyclic_invariant_metric(infconv::gen::Rng& rng, int n) {
  std::vector<Rat> w(n, Rat(0));
  for (int k = 1; k <= n / 2; ++k) {
    const Rat val = rng.rat_in(Rat(1), Rat(2));
    w[k] = val;
    w[n - k] = val;
  }
  MetricTable t;
  t.n = n;
  t.d.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.d[i][j] = w[((i - j) % n + n) % n];
  return t;
}

// Arbitrary (usually non-invariant) law, for exercising +inf fibers.
inline infconv::FiniteMetricMagma random_law_magma(infconv::gen::Rng& rng, int n) {
  infconv::FiniteMetricMagma m;
  m.metric = infconv::discrete_metric(n);
  m.law.assign(n, std::vector<int>(n));
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) m.law[y][z] = (int)rng.below(n);
  return m;
}

}  // namespace testutil
