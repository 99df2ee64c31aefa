#include "infconv/fnspace.hpp"

#include <algorithm>

namespace infconv {

FnOnX FnOnX::constant(int n, const Rat& c) {
  FnOnX f;
  f.values.assign(n, ExtRat(c));
  return f;
}

bool FnOnX::all_finite() const {
  return std::all_of(values.begin(), values.end(),
                     [](const ExtRat& v) { return v.is_finite(); });
}

void FnOnX::validate() const {
  for (const ExtRat& v : values)
    if (v.is_finite()) return;
  throw InvariantViolation("function has empty domain (no finite value)");
}

FnOnX kuratowski(const MetricTable& metric, int a) {
  if (a < 0 || a >= metric.n) throw InvariantViolation("kuratowski: index out of range");
  FnOnX f;
  f.values.reserve(metric.n);
  for (int t = 0; t < metric.n; ++t) f.values.emplace_back(metric.d[a][t]);
  return f;
}

FnOnX kuratowski(const FiniteMetricMagma& m, int a) { return kuratowski(m.metric, a); }

bool is_lip1(const MetricTable& metric, const FnOnX& f) {
  if (f.size() != metric.n) throw InvariantViolation("is_lip1: size mismatch");
  if (!f.all_finite()) return false;
  for (int x = 0; x < metric.n; ++x)
    for (int y = x + 1; y < metric.n; ++y)
      if (rat_abs(f[x].finite() - f[y].finite()) > metric.d[x][y]) return false;
  return true;
}

bool is_lip1(const FiniteMetricMagma& m, const FnOnX& f) { return is_lip1(m.metric, f); }

bool is_positive(const FnOnX& f) {
  for (const ExtRat& v : f.values)
    if (v.is_finite() && v.finite() < 0) return false;
  return true;
}

bool is_katetov(const MetricTable& metric, const FnOnX& f) {
  if (f.size() != metric.n) throw InvariantViolation("is_katetov: size mismatch");
  if (!f.all_finite()) return false;
  for (int x = 0; x < metric.n; ++x)
    for (int y = x; y < metric.n; ++y) {
      const Rat diff = rat_abs(f[x].finite() - f[y].finite());
      if (diff > metric.d[x][y]) return false;
      if (metric.d[x][y] > f[x].finite() + f[y].finite()) return false;
    }
  return true;
}

bool is_katetov(const FiniteMetricMagma& m, const FnOnX& f) { return is_katetov(m.metric, f); }

Rat d_inf(const FnOnX& f, const FnOnX& g) {
  if (f.size() != g.size()) throw InvariantViolation("d_inf: size mismatch");
  if (f.size() == 0) throw InvariantViolation("d_inf: empty carrier");
  if (!f.all_finite() || !g.all_finite())
    throw InvariantViolation("d_inf: requires finite-valued functions");
  Rat best = rat_abs(f[0].finite() - g[0].finite());
  for (int i = 1; i < f.size(); ++i) {
    Rat v = rat_abs(f[i].finite() - g[i].finite());
    if (v > best) best = v;
  }
  return best;
}

Rat rho(const FnOnX& f, const FnOnX& g) {
  // t/(1+t) is monotone, so the sup is realized at the d_inf maximizer
  const Rat t = d_inf(f, g);
  return t / (1 + t);
}

Rat rho_tilde(const FnOnX& f, const FnOnX& g) {
  const Rat mf = min_value(f), mg = min_value(g);
  return rho(add_const(f, -mf), add_const(g, -mg)) + rat_abs(mf - mg);
}

Rat min_value(const FnOnX& f) {
  f.validate();
  bool found = false;
  Rat best;
  for (const ExtRat& v : f.values)
    if (v.is_finite() && (!found || v.finite() < best)) {
      best = v.finite();
      found = true;
    }
  return best;
}

std::vector<int> argmin_set(const FnOnX& f) {
  const Rat m = min_value(f);
  std::vector<int> out;
  for (int i = 0; i < f.size(); ++i)
    if (f[i].is_finite() && f[i].finite() == m) out.push_back(i);
  return out;
}

std::optional<int> strong_min(const FnOnX& f) {
  const std::vector<int> am = argmin_set(f);
  if (am.size() == 1) return am[0];
  return std::nullopt;
}

FnOnX add_const(const FnOnX& f, const Rat& c) {
  FnOnX out;
  out.values.reserve(f.size());
  for (const ExtRat& v : f.values)
    out.values.push_back(v.is_inf() ? ExtRat::inf() : ExtRat(Rat(v.finite() + c)));
  return out;
}

FnOnX perturb_to_strong_min(const FiniteMetricMagma& m, const FnOnX& f, int xstar,
                            const Rat& eps) {
  if (eps <= 0 || eps >= 1) throw InvariantViolation("perturb: eps must lie in (0,1)");
  if (!is_lip1(m, f)) throw InvariantViolation("perturb: f must be 1-Lipschitz");
  if (xstar < 0 || xstar >= m.n()) throw InvariantViolation("perturb: index out of range");
  const Rat mv = min_value(f);
  if (f[xstar].finite() != mv) throw InvariantViolation("perturb: xstar is not a minimizer");
  FnOnX out;
  out.values.reserve(f.size());
  const Rat keep = 1 - eps;
  for (int i = 0; i < f.size(); ++i)
    out.values.emplace_back(Rat(keep * f[i].finite() + eps * m.dist(xstar, i)));
  return out;
}

}  // namespace infconv
