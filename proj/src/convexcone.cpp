#include "infconv/convexcone.hpp"

#include <algorithm>

#include "infconv/generate.hpp"

namespace infconv {

namespace {

Rat slope_between(const std::pair<Rat, Rat>& p, const std::pair<Rat, Rat>& q) {
  return (q.second - p.second) / (q.first - p.first);
}

}  // namespace

PLKatetovFn::PLKatetovFn(std::vector<std::pair<Rat, Rat>> breakpoints) : bp_(std::move(breakpoints)) {
  if (bp_.empty()) throw InvariantViolation("pl: at least one breakpoint required");
  for (std::size_t i = 1; i < bp_.size(); ++i)
    if (bp_[i].first <= bp_[i - 1].first)
      throw InvariantViolation("pl: breakpoint abscissae must be strictly increasing");

  // Coalesce collinear runs.
  std::vector<std::pair<Rat, Rat>> out;
  out.push_back(bp_[0]);
  for (std::size_t i = 1; i < bp_.size(); ++i) {
    while (out.size() >= 2 &&
           slope_between(out[out.size() - 2], out.back()) == slope_between(out.back(), bp_[i]))
      out.pop_back();
    out.push_back(bp_[i]);
  }
  // Fold segments of tail slope into the implicit tails.
  while (out.size() >= 2 && slope_between(out[0], out[1]) == -1) out.erase(out.begin());
  while (out.size() >= 2 && slope_between(out[out.size() - 2], out.back()) == 1) out.pop_back();
  bp_ = std::move(out);

  Rat prev(-1);
  for (std::size_t i = 1; i < bp_.size(); ++i) {
    const Rat s = slope_between(bp_[i - 1], bp_[i]);
    if (s <= -1 || s >= 1)
      throw InvariantViolation("pl: interior slope outside (-1, 1): " + rat_to_string(s));
    if (s <= prev) throw InvariantViolation("pl: slopes must be strictly increasing (convexity)");
    prev = s;
  }
  if (katetov_margin() < 0)
    throw InvariantViolation("pl: Katetov condition fails, c_plus + c_minus = " +
                             rat_to_string(katetov_margin()));
}

PLKatetovFn PLKatetovFn::gamma(const Rat& x0) { return PLKatetovFn({{x0, Rat(0)}}); }

Rat PLKatetovFn::c_plus() const { return bp_.back().second - bp_.back().first; }

Rat PLKatetovFn::c_minus() const { return bp_.front().second + bp_.front().first; }

Rat PLKatetovFn::operator()(const Rat& x) const {
  if (x <= bp_.front().first) return bp_.front().second + (bp_.front().first - x);
  if (x >= bp_.back().first) return bp_.back().second + (x - bp_.back().first);
  std::size_t lo = 0, hi = bp_.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (bp_[mid].first <= x)
      lo = mid;
    else
      hi = mid;
  }
  const Rat s = slope_between(bp_[lo], bp_[hi]);
  return bp_[lo].second + s * (x - bp_[lo].first);
}

Rat PLKatetovFn::min_value() const {
  // Slopes pass from -1 to +1, so the minimum sits at a breakpoint.
  Rat best = bp_[0].second;
  for (const auto& [x, v] : bp_)
    if (v < best) best = v;
  return best;
}

std::vector<Rat> PLKatetovFn::slopes() const {
  std::vector<Rat> s;
  for (std::size_t i = 1; i < bp_.size(); ++i) s.push_back(slope_between(bp_[i - 1], bp_[i]));
  return s;
}

PLKatetovFn pl_infconv(const PLKatetovFn& f, const PLKatetovFn& g) {
  const auto& fb = f.breakpoints();
  const auto& gb = g.breakpoints();
  std::vector<std::pair<Rat, Rat>> out;
  out.reserve(fb.size() + gb.size() - 1);
  out.emplace_back(fb[0].first + gb[0].first, fb[0].second + gb[0].second);

  // Merge the two segment lists by slope; cumulative sums of (dx, dv).
  std::size_t i = 1, j = 1;
  Rat x = out[0].first, v = out[0].second;
  while (i < fb.size() || j < gb.size()) {
    bool take_f;
    if (i >= fb.size())
      take_f = false;
    else if (j >= gb.size())
      take_f = true;
    else {
      const Rat sf = slope_between(fb[i - 1], fb[i]);
      const Rat sg = slope_between(gb[j - 1], gb[j]);
      take_f = sf <= sg;
    }
    if (take_f) {
      x += fb[i].first - fb[i - 1].first;
      v += fb[i].second - fb[i - 1].second;
      ++i;
    } else {
      x += gb[j].first - gb[j - 1].first;
      v += gb[j].second - gb[j - 1].second;
      ++j;
    }
    out.emplace_back(x, v);
  }
  return PLKatetovFn(std::move(out));  // ctor coalesces equal-slope runs
}

PLKatetovFn epi_scale(const Rat& lambda, const PLKatetovFn& f) {
  if (lambda < 0) throw InvariantViolation("epi_scale: lambda must be nonnegative");
  if (lambda == 0) return PLKatetovFn::gamma(0);
  std::vector<std::pair<Rat, Rat>> out;
  out.reserve(f.breakpoints().size());
  for (const auto& [x, v] : f.breakpoints()) out.emplace_back(Rat(lambda * x), Rat(lambda * v));
  return PLKatetovFn(std::move(out));
}

Rat pl_dinf(const PLKatetovFn& f, const PLKatetovFn& g) {
  // |f-g| is piecewise linear with kinks on the union of breakpoints and is
  // constant on both tails.
  Rat best = rat_abs(f.c_plus() - g.c_plus());
  const Rat left = rat_abs(f.c_minus() - g.c_minus());
  if (left > best) best = left;
  for (const auto& [x, v] : f.breakpoints()) {
    const Rat cand = rat_abs(v - g(x));
    if (cand > best) best = cand;
  }
  for (const auto& [x, v] : g.breakpoints()) {
    const Rat cand = rat_abs(f(x) - v);
    if (cand > best) best = cand;
  }
  return best;
}

PLKatetovFn banach_scale_gamma(const Rat& lambda, const Rat& x) {
  if (lambda < 0) return epi_scale(Rat(-lambda), PLKatetovFn::gamma(Rat(-x)));
  return epi_scale(lambda, PLKatetovFn::gamma(x));
}

Rat banach_norm(const PLKatetovFn& f) { return pl_dinf(f, PLKatetovFn::gamma(0)); }

TheoremReport verify_cone_axioms(int samples, std::uint64_t seed) {
  TheoremReport rep;
  rep.theorem = "cone-axioms";
  rep.holds = true;
  gen::Rng rng(seed);
  const PLKatetovFn gamma0 = PLKatetovFn::gamma(0);

  for (int s = 0; s < samples; ++s) {
    const PLKatetovFn c = gen::random_pl(rng, 5);
    const PLKatetovFn c2 = gen::random_pl(rng, 5);
    const Rat alpha = rng.rat_in(Rat(0), Rat(3));
    const Rat beta = rng.rat_in(Rat(0), Rat(3));

    bool ok = epi_scale(Rat(1), c) == c && epi_scale(Rat(0), c) == gamma0;
    if (ok)
      ok = epi_scale(Rat(alpha + beta), c) == pl_infconv(epi_scale(alpha, c), epi_scale(beta, c));
    if (ok)
      ok = epi_scale(alpha, pl_infconv(c, c2)) ==
           pl_infconv(epi_scale(alpha, c), epi_scale(alpha, c2));
    ++rep.checks;
    if (!ok) {
      rep.holds = false;
      nlohmann::ordered_json w;
      w["sample"] = s;
      w["alpha"] = rat_to_string(alpha);
      w["beta"] = rat_to_string(beta);
      rep.violations.push_back(w);
    }
  }
  rep.details["samples"] = samples;
  rep.details["seed"] = seed;
  return rep;
}

FixedPointResult fixed_point_solve(const Rat& lambda, const PLKatetovFn& g, const Rat& tol,
                                   int max_iterations) {
  if (lambda <= 0 || lambda >= 1)
    throw InvariantViolation("fixed_point_solve: lambda must lie in (0,1)");
  if (tol <= 0) throw InvariantViolation("fixed_point_solve: tol must be positive");

  const Rat threshold = tol * (1 - lambda);
  FixedPointResult res{PLKatetovFn::gamma(0), 0, Rat(0), {}, false};
  PLKatetovFn f = PLKatetovFn::gamma(0);
  for (int it = 0; it < max_iterations; ++it) {
    PLKatetovFn next = pl_infconv(epi_scale(lambda, f), g);
    const Rat step = pl_dinf(next, f);
    res.steps.push_back(step);
    ++res.iterations;
    if (step <= threshold) {
      res.fixed = next;
      res.residual = pl_dinf(pl_infconv(epi_scale(lambda, next), g), next);
      res.converged = true;
      return res;
    }
    f = std::move(next);
  }
  res.fixed = f;
  res.residual = pl_dinf(pl_infconv(epi_scale(lambda, f), g), f);
  return res;
}

TheoremReport verify_cone_iso(bool reflection, int samples, std::uint64_t seed) {
  TheoremReport rep;
  rep.theorem = "cone-iso";
  rep.holds = true;
  gen::Rng rng(seed);

  const auto phi = [&](const PLKatetovFn& f) {
    if (!reflection) return f;
    std::vector<std::pair<Rat, Rat>> out(f.breakpoints().rbegin(), f.breakpoints().rend());
    for (auto& [x, v] : out) x = -x;
    return PLKatetovFn(std::move(out));
  };

  for (int s = 0; s < samples; ++s) {
    const PLKatetovFn f = gen::random_pl(rng, 5);
    const PLKatetovFn g = gen::random_pl(rng, 5);
    const Rat lambda = rng.rat_in(Rat(0), Rat(2));

    bool ok = phi(pl_infconv(f, g)) == pl_infconv(phi(f), phi(g));
    if (ok) ok = phi(epi_scale(lambda, f)) == epi_scale(lambda, phi(f));
    if (ok) ok = pl_dinf(phi(f), phi(g)) == pl_dinf(f, g);
    ++rep.checks;
    if (!ok) {
      rep.holds = false;
      nlohmann::ordered_json w;
      w["sample"] = s;
      rep.violations.push_back(w);
    }
  }
  rep.details["map"] = reflection ? "reflection" : "identity";
  rep.details["samples"] = samples;
  rep.details["seed"] = seed;
  return rep;
}

}  // namespace infconv
