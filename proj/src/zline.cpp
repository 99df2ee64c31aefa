#include "infconv/zline.hpp"

#include <algorithm>

#include "infconv/minplus_kernels.hpp"

namespace infconv {

Rat CofiniteSeq::at(long long i) const {
  const auto it = exc.find(i);
  return it == exc.end() ? dflt : it->second;
}

void CofiniteSeq::normalize() {
  for (auto it = exc.begin(); it != exc.end();) {
    if (it->second == dflt)
      it = exc.erase(it);
    else
      ++it;
  }
}

bool in_linf_dis(const CyclicSeq& u) {
  if (u.values.empty()) return false;
  Rat lo = u.values[0], hi = u.values[0];
  for (const Rat& v : u.values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return lo >= 0 && hi - lo <= 1;
}

bool in_linf_dis(const CofiniteSeq& u) {
  Rat lo = u.dflt, hi = u.dflt;
  for (const auto& [i, v] : u.exc) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return lo >= 0 && hi - lo <= 1;
}

CyclicSeq cyclic_delta(int p, int k) {
  CyclicSeq u;
  u.values.assign(p, Rat(1));
  u.values[((k % p) + p) % p] = 0;
  return u;
}

CofiniteSeq cofinite_delta(long long k) {
  CofiniteSeq u;
  u.dflt = 1;
  u.exc[k] = 0;
  return u;
}

MinplusMode minplus_mode_from_string(const std::string& s) {
  if (s == "naive") return MinplusMode::Naive;
  if (s == "merge" || s == "convex-merge") return MinplusMode::Merge;
  if (s == "smawk") return MinplusMode::Smawk;
  throw ParseError("unknown min-plus mode: \"" + s + "\"");
}

std::string to_string(MinplusMode mode) {
  switch (mode) {
    case MinplusMode::Naive: return "naive";
    case MinplusMode::Merge: return "convex-merge";
    case MinplusMode::Smawk: return "smawk";
  }
  return "naive";
}

namespace {

CyclicSeq cyclic_naive(const CyclicSeq& u, const CyclicSeq& v) {
  const int p = u.p();
  CyclicSeq out;
  out.values.reserve(p);
  for (int n = 0; n < p; ++n) {
    Rat best = u.values[n] + v.values[0];
    for (int k = 1; k < p; ++k) {
      Rat cand = u.values[(((n - k) % p) + p) % p] + v.values[k];
      if (cand < best) best = cand;
    }
    out.values.push_back(best);
  }
  return out;
}

// Straight-line convolution of one doubled period of u against v, folded back
// to period p: every cyclic candidate k appears at linear offset n or n+p.
CyclicSeq cyclic_via_linear(const CyclicSeq& u, const CyclicSeq& v, MinplusMode mode) {
  const int p = u.p();
  std::vector<Rat> doubled;
  doubled.reserve(2 * p);
  for (int rep = 0; rep < 2; ++rep)
    for (const Rat& x : u.values) doubled.push_back(x);
  std::vector<Rat> lin = mode == MinplusMode::Merge
                             ? convex_minplus_merge(doubled, v.values)
                             : smawk_minplus(doubled, v.values);
  CyclicSeq out;
  out.values.reserve(p);
  for (int n = 0; n < p; ++n) out.values.push_back(std::min(lin[n], lin[n + p]));
  return out;
}

}  // namespace

CyclicSeq cyclic_minplus(const CyclicSeq& u, const CyclicSeq& v, MinplusMode mode) {
  if (u.p() == 0 || v.p() == 0) throw InvariantViolation("cyclic_minplus: empty sequence");
  if (u.p() != v.p()) throw InvariantViolation("cyclic_minplus: mismatched periods");
  if (mode == MinplusMode::Naive) return cyclic_naive(u, v);
  return cyclic_via_linear(u, v, mode);
}

CofiniteSeq z_minplus(const CofiniteSeq& u, const CofiniteSeq& v) {
  if (!in_linf_dis(u) || !in_linf_dis(v))
    throw InvariantViolation("z_minplus: operands must lie in l^inf_dis(Z)");

  // Off the sumset of exception positions the value is a constant: the best
  // of default+default and the best exception of either side paired with the
  // other side's default.
  Rat base = u.dflt + v.dflt;
  for (const auto& [k, vk] : v.exc) {
    Rat cand = u.dflt + vk;
    if (cand < base) base = cand;
  }
  for (const auto& [j, uj] : u.exc) {
    Rat cand = uj + v.dflt;
    if (cand < base) base = cand;
  }

  const auto value_at = [&](long long n) {
    Rat best = u.dflt + v.dflt;
    for (const auto& [k, vk] : v.exc) {
      Rat cand = u.at(n - k) + vk;
      if (cand < best) best = cand;
    }
    for (const auto& [j, uj] : u.exc) {
      Rat cand = uj + v.at(n - j);
      if (cand < best) best = cand;
    }
    return best;
  };

  CofiniteSeq out;
  out.dflt = base;
  for (const auto& [j, uj] : u.exc)
    for (const auto& [k, vk] : v.exc) {
      const long long n = j + k;
      if (out.exc.count(n)) continue;
      Rat val = value_at(n);
      if (val != base) out.exc[n] = val;
    }
  return out;
}

}  // namespace infconv
