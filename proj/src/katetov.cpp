#include "infconv/katetov.hpp"

#include <algorithm>

namespace infconv {

void SubspaceFn::validate() const {
  metric.validate();
  if (subset.empty()) throw InvariantViolation("subspace: empty subset");
  if (subset.size() != values.size())
    throw InvariantViolation("subspace: subset/values length mismatch");
  std::vector<char> seen(metric.n, 0);
  for (int y : subset) {
    if (y < 0 || y >= metric.n) throw InvariantViolation("subspace: index out of range");
    if (seen[y]) throw InvariantViolation("subspace: duplicate index " + std::to_string(y));
    seen[y] = 1;
  }
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i; j < subset.size(); ++j) {
      const Rat& dij = metric.d[subset[i]][subset[j]];
      if (rat_abs(values[i] - values[j]) > dij)
        throw InvariantViolation("subspace: values are not 1-Lipschitz on Y at (" +
                                 std::to_string(subset[i]) + "," + std::to_string(subset[j]) + ")");
      if (dij > values[i] + values[j])
        throw InvariantViolation("subspace: Katetov lower bound fails on Y at (" +
                                 std::to_string(subset[i]) + "," + std::to_string(subset[j]) + ")");
    }
}

FnOnX katetov_extension(const SubspaceFn& sf) {
  sf.validate();
  const int n = sf.metric.n;
  FnOnX out;
  out.values.reserve(n);
  for (int x = 0; x < n; ++x) {
    Rat best = sf.values[0] + sf.metric.d[x][sf.subset[0]];
    for (std::size_t i = 1; i < sf.subset.size(); ++i) {
      Rat cand = sf.values[i] + sf.metric.d[x][sf.subset[i]];
      if (cand < best) best = cand;
    }
    out.values.emplace_back(std::move(best));
  }
  return out;
}

TheoremReport katetov_closure_check(const FiniteMetricMagma& m, const FnOnX& f, const FnOnX& g) {
  if (!is_katetov(m, f) || !is_katetov(m, g))
    throw InvariantViolation("katetov_closure_check: inputs must be Katetov");
  TheoremReport rep;
  rep.theorem = "katetov-closure";
  const FnOnX conv = inf_conv(m, f, g);
  rep.checks = (long long)m.n() * m.n();
  rep.holds = is_katetov(m, conv);
  if (!rep.holds) {
    auto arr = nlohmann::ordered_json::array();
    for (const ExtRat& v : conv.values) arr.push_back(v.str());
    rep.violations.push_back({{"convolution", arr}});
  }
  return rep;
}

TheoremReport contraction_isometry_check(const FiniteMetricMagma& m, const FnOnX& f,
                                         const FnOnX& g, const FnOnX& h) {
  if (!is_katetov(m, f) || !is_katetov(m, g) || !is_katetov(m, h))
    throw InvariantViolation("contraction_isometry_check: inputs must be Katetov");
  TheoremReport rep;
  rep.theorem = "katetov-contraction";
  rep.holds = true;

  const Rat dfh = d_inf(f, h);
  if (d_inf(inf_conv(m, f, g), inf_conv(m, h, g)) > dfh) {
    rep.holds = false;
    rep.violations.push_back("right convolution expands d_inf");
  }
  if (d_inf(inf_conv(m, g, f), inf_conv(m, g, h)) > dfh) {
    rep.holds = false;
    rep.violations.push_back("left convolution expands d_inf");
  }
  rep.checks += 2;

  for (int x = 0; x < m.n(); ++x) {
    const FnOnX dx = kuratowski(m, x);
    const bool left = d_inf(inf_conv(m, dx, f), inf_conv(m, dx, h)) == dfh;
    const bool right = d_inf(inf_conv(m, f, dx), inf_conv(m, h, dx)) == dfh;
    rep.checks += 2;
    if (!left || !right) {
      rep.holds = false;
      rep.violations.push_back("delta_" + std::to_string(x) + " does not act isometrically");
    }
  }
  return rep;
}

Rat eval_as_distance(const FiniteMetricMagma& m, const FnOnX& f, int x) {
  if (!is_katetov(m, f)) throw InvariantViolation("eval_as_distance: f is not Katetov");
  if (x < 0 || x >= m.n()) throw InvariantViolation("eval_as_distance: index out of range");
  const Rat dist = d_inf(f, kuratowski(m, x));
  if (dist != f[x].finite())
    throw std::logic_error("eval_as_distance: d_inf(f, gamma(x)) != f(x)");
  return dist;
}

TheoremReport katetov_units(const FiniteMetricMagma& m) {
  if (classify_magma(m) < MagmaClass::Group)
    throw HypothesisUnmet("katetov-units: carrier is not a group");
  if (!check_metric_invariance(m))
    throw HypothesisUnmet("katetov-units: law is not metric invariant");

  TheoremReport rep;
  rep.theorem = "katetov-units";
  rep.holds = true;
  const int n = m.n();
  const int e = *two_sided_identity(m);
  const FnOnX id = kuratowski(m, e);

  for (int x = 0; x < n; ++x) {
    const FnOnX dx = kuratowski(m, x);
    const FnOnX dxinv = kuratowski(m, group_inverse(m, e, x));
    rep.checks += 2;
    if (!is_katetov(m, dx) || inf_conv(m, dx, dxinv) != id || inf_conv(m, dxinv, dx) != id) {
      rep.holds = false;
      rep.violations.push_back({{"element", x}, {"reason", "delta_x failed unit check"}});
    }
  }

  // Shifted candidates: Katetov members whose canonical inverse leaves the
  // class, hence non-units inside it.
  const std::vector<Rat> shifts = {rat(1, 2), Rat(1)};
  for (int y = 0; y < std::min(n, 3); ++y)
    for (const Rat& c : shifts) {
      const FnOnX candidate = add_const(kuratowski(m, y), c);
      if (!is_katetov(m, candidate)) continue;
      const FnOnX inverse = add_const(kuratowski(m, group_inverse(m, e, y)), Rat(-c));
      ++rep.checks;
      if (is_katetov(m, inverse)) {
        rep.holds = false;
        rep.violations.push_back({{"element", y},
                                  {"shift", rat_to_string(c)},
                                  {"reason", "shifted inverse unexpectedly Katetov"}});
      } else {
        rep.witnesses.push_back({{"element", y},
                                 {"shift", rat_to_string(c)},
                                 {"non_unit", "inverse candidate leaves the Katetov class"}});
      }
    }
  rep.details["carrier"] = n;
  return rep;
}

}  // namespace infconv
