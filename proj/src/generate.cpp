#include "infconv/generate.hpp"

#include <algorithm>

namespace infconv::gen {

MetricTable random_metric(Rng& rng, int n) {
  MetricTable t;
  t.n = n;
  t.d.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat w = rng.rat_in(rat(1, 2), Rat(2));
      t.d[i][j] = w;
      t.d[j][i] = w;
    }
  // Min-plus closure repairs the triangle inequality and keeps symmetry.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat via = t.d[i][k] + t.d[k][j];
        if (via < t.d[i][j]) t.d[i][j] = via;
      }
  for (int i = 0; i < n; ++i) t.d[i][i] = 0;
  return t;
}

FnOnX random_lip1(Rng& rng, const MetricTable& metric, bool nonneg) {
  const int n = metric.n;
  std::vector<Rat> vals(n);
  vals[0] = rng.rat_in(Rat(0), Rat(2));
  for (int x = 1; x < n; ++x) {
    Rat lo = vals[0] - metric.d[x][0];
    Rat hi = vals[0] + metric.d[x][0];
    for (int z = 1; z < x; ++z) {
      Rat zl = vals[z] - metric.d[x][z];
      Rat zh = vals[z] + metric.d[x][z];
      if (zl > lo) lo = zl;
      if (zh < hi) hi = zh;
    }
    if (nonneg && lo < 0) lo = 0;
    vals[x] = rng.rat_in(lo, hi);
  }
  FnOnX f;
  f.values.reserve(n);
  for (Rat& v : vals) f.values.emplace_back(std::move(v));
  return f;
}

namespace {

// Admissible interval for the next Katetov value given the ones fixed so far.
std::pair<Rat, Rat> katetov_interval(const MetricTable& metric, const std::vector<int>& pts,
                                     const std::vector<Rat>& vals, std::size_t upto, int x) {
  Rat lo(0), hi;
  bool have_hi = false;
  for (std::size_t i = 0; i < upto; ++i) {
    const Rat& d = metric.d[x][pts[i]];
    Rat l1 = vals[i] - d;
    Rat l2 = d - vals[i];
    if (l1 > lo) lo = l1;
    if (l2 > lo) lo = l2;
    Rat h = vals[i] + d;
    if (!have_hi || h < hi) {
      hi = h;
      have_hi = true;
    }
  }
  if (!have_hi) hi = lo + 2;
  return {lo, hi};
}

}  // namespace

std::vector<Rat> random_katetov_on_subset(Rng& rng, const MetricTable& metric,
                                          const std::vector<int>& subset) {
  std::vector<Rat> vals(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    auto [lo, hi] = katetov_interval(metric, subset, vals, i, subset[i]);
    vals[i] = rng.rat_in(lo, hi);
  }
  return vals;
}

FnOnX random_katetov(Rng& rng, const MetricTable& metric) {
  std::vector<int> all(metric.n);
  for (int i = 0; i < metric.n; ++i) all[i] = i;
  std::vector<Rat> vals = random_katetov_on_subset(rng, metric, all);
  FnOnX f;
  f.values.reserve(metric.n);
  for (Rat& v : vals) f.values.emplace_back(std::move(v));
  return f;
}

FnOnX random_lip1_extension(Rng& rng, const MetricTable& metric, const std::vector<int>& subset,
                            const std::vector<Rat>& values) {
  const int n = metric.n;
  std::vector<char> fixed(n, 0);
  std::vector<Rat> vals(n);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    fixed[subset[i]] = 1;
    vals[subset[i]] = values[i];
  }
  std::vector<int> done(subset);
  for (int x = 0; x < n; ++x) {
    if (fixed[x]) continue;
    Rat lo, hi;
    bool first = true;
    for (int z : done) {
      Rat zl = vals[z] - metric.d[x][z];
      Rat zh = vals[z] + metric.d[x][z];
      if (first || zl > lo) lo = zl;
      if (first || zh < hi) hi = zh;
      first = false;
    }
    vals[x] = rng.rat_in(lo, hi);
    done.push_back(x);
    fixed[x] = 1;
  }
  FnOnX f;
  f.values.reserve(n);
  for (Rat& v : vals) f.values.emplace_back(std::move(v));
  return f;
}

std::vector<int> random_subset(Rng& rng, int n, int k) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(all[i], all[rng.below(i + 1)]);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

CyclicSeq random_linf_cyclic(Rng& rng, int p) {
  CyclicSeq u;
  u.values.reserve(p);
  const Rat base = rng.rat_in(Rat(0), Rat(2));
  for (int i = 0; i < p; ++i) u.values.push_back(Rat(base + rng.rat_in(Rat(0), Rat(1))));
  return u;
}

CofiniteSeq random_linf_cofinite(Rng& rng, int max_exceptions) {
  CofiniteSeq u;
  u.dflt = rng.rat_in(rat(1, 2), rat(3, 2));
  const int k = (int)rng.below(max_exceptions + 1);
  for (int i = 0; i < k; ++i) {
    const long long pos = rng.below(41) - 20;
    Rat lo = u.dflt - rat(1, 2);
    if (lo < 0) lo = 0;
    u.exc[pos] = rng.rat_in(lo, Rat(u.dflt + rat(1, 2)));
  }
  u.normalize();
  return u;
}

PLKatetovFn random_pl(Rng& rng, int max_segments) {
  const int want = (int)rng.below(max_segments + 1);
  // Distinct increasing slopes strictly inside (-1, 1).
  std::vector<Rat> slopes;
  for (int i = 0; i < want; ++i) slopes.push_back(rat(rng.below(31) - 15, 16));
  std::sort(slopes.begin(), slopes.end());
  slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());

  std::vector<std::pair<Rat, Rat>> bps;
  Rat x = rng.rat_in(Rat(-4), Rat(4));
  Rat v = rng.rat_in(Rat(0), Rat(4));
  bps.emplace_back(x, v);
  for (const Rat& s : slopes) {
    const Rat dx = rng.rat_in(rat(1, 4), Rat(2));
    x += dx;
    v += s * dx;
    bps.emplace_back(x, v);
  }
  // Lift until the Katetov margin is nonnegative, plus a random slack.
  const Rat margin = (bps.back().second - bps.back().first) + (bps.front().second + bps.front().first);
  Rat lift = rng.rat_in(Rat(0), rat(1, 2));
  if (margin < 0) lift += -margin / 2;
  if (lift != 0)
    for (auto& [bx, bv] : bps) bv += lift;
  return PLKatetovFn(std::move(bps));
}

std::vector<Rat> random_convex_rational_seq(Rng& rng, int len) {
  std::vector<Rat> out;
  out.reserve(len);
  Rat cur = rng.rat_in(Rat(0), Rat(8));
  Rat slope = rng.rat_in(Rat(-4), Rat(0));
  for (int i = 0; i < len; ++i) {
    out.push_back(cur);
    cur += slope;
    slope += rng.rat_in(Rat(0), rat(1, 2));
  }
  return out;
}

std::vector<Rat> random_rational_seq(Rng& rng, int len) {
  std::vector<Rat> out;
  out.reserve(len);
  for (int i = 0; i < len; ++i) out.push_back(rng.rat_in(Rat(0), Rat(16)));
  return out;
}

}  // namespace infconv::gen
