#include "infconv/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "infconv/generate.hpp"
#include "infconv/io.hpp"
#include "infconv/monoid_audit.hpp"

namespace infconv {

namespace {

struct GlobalOpts {
  std::uint64_t seed = gen::kDefaultSeed;
  std::string output;  // empty = stdout
  std::string format = "json";
};

void emit(const GlobalOpts& g, const json& report) {
  const std::string text = report.dump(2) + "\n";
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw InvariantViolation("cannot open output file: " + g.output);
  out << text;
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rat_from_string(item));
  if (out.empty()) throw ParseError("empty rational list");
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("not an integer: \"" + item + "\"");
    }
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

json fond0_to_json(const Fond0Report& r) {
  json rep;
  rep["theorem"] = "fond0";
  rep["status"] = r.status == Fond0Status::Holds      ? "holds"
                  : r.status == Fond0Status::Violated ? "violated"
                                                      : "hypothesis-unmet";
  rep["direction_i"] = r.direction_i ? json(*r.direction_i) : json(nullptr);
  rep["direction_ii"] =
      r.direction_ii ? json::array({r.direction_ii->first, r.direction_ii->second})
                     : json(nullptr);
  rep["equivalence_holds"] = r.equivalence_holds;
  rep["consequence1_holds"] = r.consequence1_holds;
  rep["consequence2_holds"] = r.consequence2_holds;
  rep["witness"] = r.witness;
  rep["convolution"] = fn_to_json(r.conv);
  return rep;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"exact inf-convolution algebra over finite carriers, sequence"
               " monoids and the piecewise-linear convex cone"};
  app.require_subcommand(1);

  GlobalOpts g;
  int code = 0;
  app.add_option("--seed", g.seed, "seed for randomized suites");
  app.add_option("--output", g.output, "write the JSON report to this file");
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json"}));

  struct Args {
    std::string magma, magma2, f, gfn, h, sub, u, v, pl1, pl2;
    std::string map, grid = "0,1", space = "lip1", mode = "naive";
    std::string lambda = "1/2", tol = "1/1000000000";
    int p = 0, n = 1024;
  };
  auto a = std::make_shared<Args>();

  const auto add_sub = [&](CLI::App* parent, const char* name, const char* desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // ---- carrier-level commands ----------------------------------------
  CLI::App* classify = add_sub(&app, "classify", "classify a carrier law");
  classify->add_option("magma", a->magma, "magma JSON file")->required();
  classify->callback([&, a] {
    const auto m = load_magma(a->magma);
    json rep;
    rep["command"] = "classify";
    rep["class"] = to_string(classify_magma(m));
    rep["metric_invariant"] = check_metric_invariance(m);
    rep["latin_square"] = is_latin_square(m);
    emit(g, rep);
  });

  CLI::App* invariance = add_sub(&app, "invariance", "metric invariance and tight constants");
  invariance->add_option("magma", a->magma)->required();
  invariance->callback([&, a] {
    const auto m = load_magma(a->magma);
    json rep;
    rep["command"] = "invariance";
    rep["metric_invariant"] = check_metric_invariance(m);
    auto arr = json::array();
    for (int x = 0; x < m.n(); ++x) {
      json row;
      row["x"] = x;
      const auto c = d_invariance_at(m, x);
      if (c) {
        row["L1"] = rat_to_string(c->l1);
        row["L2"] = rat_to_string(c->l2);
        row["L1p"] = rat_to_string(c->l1p);
        row["L2p"] = rat_to_string(c->l2p);
      } else {
        row["constants"] = nullptr;
      }
      arr.push_back(row);
    }
    rep["d_invariance"] = arr;
    emit(g, rep);
  });

  // ---- convolution engine ---------------------------------------------
  CLI::App* convolve = add_sub(&app, "convolve", "inf-convolution of two functions");
  convolve->add_option("magma", a->magma)->required();
  convolve->add_option("f", a->f)->required();
  convolve->add_option("g", a->gfn)->required();
  convolve->callback([&, a] {
    const auto m = load_magma(a->magma);
    const auto f = load_fn(a->f);
    const auto gg = load_fn(a->gfn);
    const FnOnX conv = inf_conv(m, f, gg);
    json rep;
    rep["command"] = "convolve";
    rep["result"] = fn_to_json(conv);
    auto att = json::array();
    for (int x = 0; x < m.n(); ++x) {
      const auto r = attainment(m, f, gg, x);
      json row;
      row["target"] = x;
      row["value"] = r.value.str();
      auto pairs = json::array();
      for (const auto& [y, z] : r.minimizing_pairs) pairs.push_back(json::array({y, z}));
      row["minimizing_pairs"] = pairs;
      row["strongly_attained"] = r.strongly_attained;
      att.push_back(row);
    }
    rep["attainments"] = att;
    emit(g, rep);
  });

  CLI::App* fond0 = add_sub(&app, "fond0", "strong-minimum factorization equivalence");
  fond0->add_option("magma", a->magma)->required();
  fond0->add_option("f", a->f)->required();
  fond0->add_option("g", a->gfn)->required();
  fond0->callback([&, a] {
    const auto m = load_magma(a->magma);
    const auto r = verify_fond0(m, load_fn(a->f), load_fn(a->gfn));
    emit(g, fond0_to_json(r));
    code = r.status == Fond0Status::Holds ? 0 : r.status == Fond0Status::Violated ? 3 : 4;
  });

  // ---- monoid audit ----------------------------------------------------
  CLI::App* unit = add_sub(&app, "unit-check", "canonical-form unit detection");
  unit->add_option("magma", a->magma)->required();
  unit->add_option("f", a->f)->required();
  unit->add_option("--space", a->space, "lip1 (default) or lip1plus")
      ->check(CLI::IsMember({"lip1", "lip1plus"}));
  unit->callback([&, a] {
    const auto m = load_magma(a->magma);
    const auto f = load_fn(a->f);
    const auto cert =
        is_unit(m, f, a->space == "lip1plus" ? UnitSpace::Lip1Plus : UnitSpace::Lip1);
    json rep;
    rep["command"] = "unit-check";
    rep["space"] = a->space;
    rep["is_unit"] = cert.has_value();
    if (cert) {
      rep["base"] = cert->base;
      rep["shift"] = rat_to_string(cert->shift);
      rep["inverse"] = fn_to_json(cert->inverse);
      rep["verified_by_convolution"] = true;
    }
    emit(g, rep);
  });

  CLI::App* closure = add_sub(&app, "closure", "Kuratowski image closure under convolution");
  closure->add_option("magma", a->magma)->required();
  closure->callback([&, a] {
    const auto rep = kuratowski_closure(load_magma(a->magma));
    emit(g, report_to_json(rep));
    code = rep.holds ? 0 : 3;
  });

  CLI::App* int2 = add_sub(&app, "int2", "monoid structure probes (identity, associativity)");
  int2->add_option("magma", a->magma)->required();
  int2->callback([&, a] {
    const auto rep = verify_int2(load_magma(a->magma));
    emit(g, report_to_json(rep));
    code = rep.holds ? 0 : 3;
  });

  CLI::App* argmin = add_sub(&app, "argmin", "argmin monoid morphism check");
  argmin->add_option("magma", a->magma)->required();
  argmin->add_option("f", a->f)->required();
  argmin->add_option("g", a->gfn)->required();
  argmin->callback([&, a] {
    const auto m = load_magma(a->magma);
    const auto rep = argmin_morphism(m, load_fn(a->f), load_fn(a->gfn));
    json out;
    out["command"] = "argmin";
    out["pairs_checked"] = rep.pairs_checked;
    out["violations"] = rep.violations;
    out["holds"] = rep.holds;
    emit(g, out);
    code = rep.holds ? 0 : 3;
  });

  CLI::App* iso = add_sub(&app, "iso-verify", "canonical isomorphism f -> f o T^{-1}");
  iso->add_option("magma1", a->magma)->required();
  iso->add_option("magma2", a->magma2)->required();
  iso->add_option("--map", a->map, "comma-separated images T(0),T(1),...")->required();
  iso->callback([&, a] {
    const auto m1 = load_magma(a->magma);
    const auto m2 = load_magma(a->magma2);
    const auto [phi, rep] = canonical_iso(m1, m2, parse_int_list(a->map), g.seed);
    json out = report_to_json(rep);
    out["map"] = phi.map;
    emit(g, out);
    code = rep.holds ? 0 : 3;
  });

  CLI::App* cancel = add_sub(&app, "cancel-search", "search for a cancellation counterexample");
  cancel->add_option("magma", a->magma)->required();
  cancel->add_option("--grid", a->grid, "comma-separated value grid (default 0,1)");
  cancel->callback([&, a] {
    const auto m = load_magma(a->magma);
    const auto triple = cancellation_search(m, parse_rat_list(a->grid));
    json rep;
    rep["command"] = "cancel-search";
    rep["found"] = triple.has_value();
    if (triple) {
      rep["f"] = fn_to_json(triple->f);
      rep["h"] = fn_to_json(triple->h);
      rep["g"] = fn_to_json(triple->g);
      rep["verified"] = true;
    }
    emit(g, rep);
  });

  // ---- Katetov space ----------------------------------------------------
  CLI::App* kat = add_sub(&app, "katetov", "Katetov space operations");
  kat->require_subcommand(1);

  CLI::App* kext = add_sub(kat, "extend", "greatest 1-Lipschitz extension from a subspace");
  kext->add_option("subspace", a->sub)->required();
  kext->callback([&, a] {
    const auto sf = load_subspace(a->sub);
    const FnOnX ext = katetov_extension(sf);
    json rep;
    rep["command"] = "katetov-extend";
    rep["extension"] = fn_to_json(ext);
    rep["katetov"] = is_katetov(sf.metric, ext);
    emit(g, rep);
  });

  CLI::App* kchk = add_sub(kat, "check", "membership / closure / contraction checks");
  kchk->add_option("magma", a->magma)->required();
  kchk->add_option("f", a->f)->required();
  kchk->add_option("g", a->gfn);
  kchk->add_option("hfn", a->h);
  kchk->callback([&, a] {
    const auto m = load_magma(a->magma);
    const auto f = load_fn(a->f);
    if (a->gfn.empty()) {
      json rep;
      rep["command"] = "katetov-check";
      rep["is_katetov"] = is_katetov(m, f);
      emit(g, rep);
      code = rep["is_katetov"].get<bool>() ? 0 : 3;
      return;
    }
    const auto gg = load_fn(a->gfn);
    if (a->h.empty()) {
      const auto rep = katetov_closure_check(m, f, gg);
      emit(g, report_to_json(rep));
      code = rep.holds ? 0 : 3;
      return;
    }
    const auto rep = contraction_isometry_check(m, f, gg, load_fn(a->h));
    emit(g, report_to_json(rep));
    code = rep.holds ? 0 : 3;
  });

  CLI::App* kunits = add_sub(kat, "units", "unit group of the Katetov monoid");
  kunits->add_option("magma", a->magma)->required();
  kunits->callback([&, a] {
    const auto rep = katetov_units(load_magma(a->magma));
    emit(g, report_to_json(rep));
    code = rep.holds ? 0 : 3;
  });

  // ---- sequence monoids ---------------------------------------------------
  CLI::App* cyclic = add_sub(&app, "cyclic", "p-periodic sequences");
  cyclic->require_subcommand(1);
  CLI::App* cconv = add_sub(cyclic, "conv", "cyclic min-plus convolution");
  cconv->add_option("-p", a->p, "period (checked against the files)");
  cconv->add_option("u", a->u)->required();
  cconv->add_option("v", a->v)->required();
  cconv->add_option("--mode", a->mode, "naive | merge | smawk");
  cconv->callback([&, a] {
    const auto u = load_cyclic(a->u);
    const auto v = load_cyclic(a->v);
    if (a->p > 0 && (u.p() != a->p || v.p() != a->p))
      throw InvariantViolation("cyclic conv: -p disagrees with the input files");
    const auto w = cyclic_minplus(u, v, minplus_mode_from_string(a->mode));
    json rep;
    rep["command"] = "cyclic-conv";
    rep["mode"] = a->mode;
    rep["inputs_in_linf_dis"] = json::array({in_linf_dis(u), in_linf_dis(v)});
    rep["result"] = cyclic_to_json(w);
    rep["result_in_linf_dis"] = in_linf_dis(w);
    emit(g, rep);
  });

  CLI::App* zseq = add_sub(&app, "zseq", "cofinite sequences on Z");
  zseq->require_subcommand(1);
  CLI::App* zconv = add_sub(zseq, "conv", "min-plus convolution on Z");
  zconv->add_option("u", a->u)->required();
  zconv->add_option("v", a->v)->required();
  zconv->callback([&, a] {
    const auto u = load_cofinite(a->u);
    const auto v = load_cofinite(a->v);
    const auto w = z_minplus(u, v);
    json rep;
    rep["command"] = "zseq-conv";
    rep["result"] = cofinite_to_json(w);
    rep["result_in_linf_dis"] = in_linf_dis(w);
    emit(g, rep);
  });

  // ---- piecewise-linear convex cone ---------------------------------------
  CLI::App* pl = add_sub(&app, "pl", "piecewise-linear convex Katetov functions");
  pl->require_subcommand(1);

  CLI::App* pconv = add_sub(pl, "conv", "inf-convolution by slope merge");
  pconv->add_option("f", a->pl1)->required();
  pconv->add_option("g", a->pl2)->required();
  pconv->callback([&, a] {
    const auto f = load_pl(a->pl1);
    const auto h = load_pl(a->pl2);
    json rep;
    rep["command"] = "pl-conv";
    rep["result"] = pl_to_json(pl_infconv(f, h));
    emit(g, rep);
  });

  CLI::App* pscale = add_sub(pl, "scale", "epigraph scaling");
  pscale->add_option("--lambda", a->lambda, "nonnegative rational")->required();
  pscale->add_option("f", a->pl1)->required();
  pscale->callback([&, a] {
    const auto f = load_pl(a->pl1);
    json rep;
    rep["command"] = "pl-scale";
    rep["lambda"] = a->lambda;
    rep["result"] = pl_to_json(epi_scale(rat_from_string(a->lambda), f));
    emit(g, rep);
  });

  CLI::App* pfix = add_sub(pl, "fixedpoint", "contraction fixed point of f -> (lambda*f)+g");
  pfix->add_option("--lambda", a->lambda, "contraction factor in (0,1)")->required();
  pfix->add_option("--tol", a->tol, "termination tolerance");
  pfix->add_option("g", a->pl1)->required();
  pfix->callback([&, a] {
    const auto gg = load_pl(a->pl1);
    const auto res =
        fixed_point_solve(rat_from_string(a->lambda), gg, rat_from_string(a->tol));
    json rep;
    rep["command"] = "pl-fixedpoint";
    rep["converged"] = res.converged;
    rep["iterations"] = res.iterations;
    rep["residual"] = rat_to_string(res.residual);
    rep["fixed_point"] = pl_to_json(res.fixed);
    emit(g, rep);
    code = res.converged ? 0 : 3;
  });

  CLI::App* pcheck = add_sub(pl, "check", "validate and canonicalize a PL function");
  pcheck->add_option("f", a->pl1)->required();
  pcheck->callback([&, a] {
    const auto f = load_pl(a->pl1);
    json rep;
    rep["command"] = "pl-check";
    rep["canonical"] = pl_to_json(f);
    rep["c_plus"] = rat_to_string(f.c_plus());
    rep["c_minus"] = rat_to_string(f.c_minus());
    rep["katetov_margin"] = rat_to_string(f.katetov_margin());
    auto sl = json::array();
    for (const Rat& s : f.slopes()) sl.push_back(rat_to_string(s));
    rep["slopes"] = sl;
    emit(g, rep);
  });

  // ---- benchmarks -----------------------------------------------------------
  CLI::App* bench = add_sub(&app, "bench", "kernel benchmarks");
  bench->require_subcommand(1);
  CLI::App* bmp = add_sub(bench, "minplus", "min-plus kernels vs the naive oracle");
  bmp->add_option("--n", a->n, "instance length")->required();
  bmp->add_option("--mode", a->mode, "naive | convex-merge | smawk");
  bmp->callback([&, a] {
    const auto rep = bench_minplus(a->n, minplus_mode_from_string(a->mode), g.seed);
    json out;
    out["command"] = "bench-minplus";
    out["n"] = rep.n;
    out["mode"] = rep.mode;
    out["seed"] = rep.seed;
    out["fast_ms"] = rep.fast_ms;
    out["naive_ms"] = rep.naive_ms;
    out["speedup"] = rep.speedup;
    out["fast_ops"] = rep.fast_ops;
    out["naive_ops"] = rep.naive_ops;
    out["verified"] = rep.verified;
    out["verified_points"] = rep.verified_points;
    emit(g, out);
    code = rep.verified ? 0 : 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const HypothesisUnmet& e) {
    std::cerr << "hypothesis unmet: " << e.what() << "\n";
    return 4;
  }
  return code;
}

}  // namespace infconv
