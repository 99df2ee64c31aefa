#include <doctest.h>

#include "infconv/generate.hpp"
#include "infconv/infconv.hpp"
#include "infconv/monoid_audit.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace infconv;
using testutil::fn;

TEST_CASE("engine agrees with the pair-scan oracle") {
  gen::Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + (int)rng.below(5);
    FiniteMetricMagma m;
    if (rng.below(2) == 0)
      m = cyclic_group(n, testutil::cyclic_invariant_metric(rng, n));
    else
      m = testutil::random_law_magma(rng, n);

    FnOnX f = gen::random_lip1(rng, m.metric, true);
    FnOnX g = gen::random_lip1(rng, m.metric, true);
    // sprinkle +inf entries, keeping the domain nonempty
    if (rng.below(3) == 0) f.values[rng.below(n)] = ExtRat::inf();
    if (rng.below(3) == 0) g.values[rng.below(n)] = ExtRat::inf();
    bool fin_f = false, fin_g = false;
    for (const auto& v : f.values) fin_f |= v.is_finite();
    for (const auto& v : g.values) fin_g |= v.is_finite();
    if (!fin_f || !fin_g) continue;

    CHECK(inf_conv(m, f, g) == oracle::inf_conv(m, f, g));
  }
}

TEST_CASE("convolution identities on group carriers") {
  const auto z3 = cyclic_group(3);

  SUBCASE("delta_1 + delta_2 = delta_0") {
    CHECK(inf_conv(z3, kuratowski(z3, 1), kuratowski(z3, 2)) == kuratowski(z3, 0));
  }
  SUBCASE("gamma(e) is a two-sided identity on Lip1+") {
    gen::Rng rng(29);
    const auto m = cyclic_group(5, testutil::cyclic_invariant_metric(rng, 5));
    const FnOnX id = kuratowski(m, 0);
    for (int t = 0; t < 20; ++t) {
      const FnOnX f = gen::random_lip1(rng, m.metric, true);
      CHECK(inf_conv(m, id, f) == f);
      CHECK(inf_conv(m, f, id) == f);
    }
  }
  SUBCASE("convolving with zero flattens to the minimum") {
    gen::Rng rng(31);
    const FnOnX f = gen::random_lip1(rng, z3.metric, true);
    const FnOnX conv = inf_conv(z3, f, FnOnX::constant(3, Rat(0)));
    for (int x = 0; x < 3; ++x) CHECK(conv[x].finite() == min_value(f));
  }
}

TEST_CASE("attainment reports") {
  const auto z3 = cyclic_group(3);

  SUBCASE("unique pair") {
    const auto r = attainment(z3, kuratowski(z3, 1), kuratowski(z3, 2), 0);
    CHECK(r.value == ExtRat(Rat(0)));
    CHECK(r.minimizing_pairs == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(r.strongly_attained);
  }
  SUBCASE("symmetric tie") {
    const auto z2 = cyclic_group(2);
    const auto r = attainment(z2, FnOnX::constant(2, Rat(0)), FnOnX::constant(2, Rat(0)), 0);
    CHECK(r.minimizing_pairs.size() == 2);
    CHECK_FALSE(r.strongly_attained);
  }
  SUBCASE("empty fiber yields +inf and no pairs") {
    FiniteMetricMagma m = left_projection_magma(2);  // law image = {0,1} row-wise
    m.law = {{0, 0}, {0, 0}};                        // nothing maps to 1
    const auto r = attainment(m, FnOnX::constant(2, Rat(0)), FnOnX::constant(2, Rat(0)), 1);
    CHECK(r.value.is_inf());
    CHECK(r.minimizing_pairs.empty());
    CHECK_FALSE(r.strongly_attained);
  }
}

TEST_CASE("strong-minimum factorization equivalence") {
  const auto z3 = cyclic_group(3);

  SUBCASE("worked instance with both consequences") {
    const FnOnX f = fn({"2", "1", "2"});  // delta_1 + 1
    const FnOnX g = fn({"1", "1", "0"});  // delta_2
    const auto r = verify_fond0(z3, f, g);
    CHECK(r.conv == fn({"1", "2", "2"}));
    CHECK(r.direction_i == 0);
    REQUIRE(r.direction_ii.has_value());
    CHECK(*r.direction_ii == std::make_pair(1, 2));
    CHECK(r.equivalence_holds);
    CHECK(r.consequence1_holds);
    CHECK(r.consequence2_holds);
    CHECK(r.status == Fond0Status::Holds);
  }
  SUBCASE("tied minima on both sides hold vacuously") {
    const FnOnX f = fn({"0", "0", "1"});
    const FnOnX g = kuratowski(z3, 0);
    const auto r = verify_fond0(z3, f, g);
    CHECK_FALSE(r.direction_i.has_value());
    CHECK_FALSE(r.direction_ii.has_value());
    CHECK(r.equivalence_holds);
    CHECK(r.status == Fond0Status::Holds);
  }
  SUBCASE("non-invariant carrier reports hypothesis unmet") {
    const auto proj = left_projection_magma(3);
    const FnOnX f = fn({"0", "1", "1"});
    const FnOnX g = fn({"1", "0", "1"});
    const auto r = verify_fond0(proj, f, g);
    CHECK(r.status == Fond0Status::HypothesisUnmet);
  }
  SUBCASE("exhaustive sweep on Z/3Z with grid {0,1/2,1}") {
    const std::vector<Rat> grid = {Rat(0), rat(1, 2), Rat(1)};
    const auto fns = grid_lip1_functions(z3, grid);
    for (const FnOnX& f : fns)
      for (const FnOnX& g : fns) {
        const auto r = verify_fond0(z3, f, g);
        CHECK(r.status == Fond0Status::Holds);
      }
  }
}

TEST_CASE("n-fold convolution and association order") {
  const auto z3 = cyclic_group(3);
  SUBCASE("singleton") {
    const std::vector<FnOnX> fs = {kuratowski(z3, 2)};
    CHECK(n_fold_conv(z3, fs, left_fold_tree(1)) == fs[0]);
  }
  SUBCASE("group deltas fold identically") {
    const auto d6 = dihedral_group(3);
    std::vector<FnOnX> fs;
    for (int i : {1, 3, 4}) fs.push_back(kuratowski(d6, i));
    CHECK(n_fold_conv(d6, fs, left_fold_tree(3)) == n_fold_conv(d6, fs, right_fold_tree(3)));
  }
  SUBCASE("subtraction quasigroup separates the folds") {
    const auto sub = subtraction_magma(5);
    const std::vector<FnOnX> fs = {kuratowski(sub, 0), kuratowski(sub, 1), kuratowski(sub, 2)};
    CHECK(n_fold_conv(sub, fs, left_fold_tree(3)) == kuratowski(sub, 2));
    CHECK(n_fold_conv(sub, fs, right_fold_tree(3)) == kuratowski(sub, 1));
  }
}

TEST_CASE("structural properties of the convolution") {
  gen::Rng rng(41);

  SUBCASE("monotone in both operands") {
    const auto m = cyclic_group(4);
    for (int t = 0; t < 15; ++t) {
      const FnOnX f = gen::random_lip1(rng, m.metric, true);
      const FnOnX g = gen::random_lip1(rng, m.metric, true);
      const FnOnX fbig = add_const(f, rng.rat_in(Rat(0), Rat(1)));
      const FnOnX gbig = add_const(g, rng.rat_in(Rat(0), Rat(1)));
      const FnOnX lo = inf_conv(m, f, g);
      const FnOnX hi = inf_conv(m, fbig, gbig);
      for (int x = 0; x < 4; ++x) CHECK(lo[x] <= hi[x]);
    }
  }
  SUBCASE("constants translate additively") {
    const auto m = dihedral_group(3);
    for (int t = 0; t < 15; ++t) {
      const FnOnX f = gen::random_lip1(rng, m.metric, true);
      const FnOnX g = gen::random_lip1(rng, m.metric, true);
      const Rat c1 = rng.rat_in(Rat(-1), Rat(1));
      const Rat c2 = rng.rat_in(Rat(-1), Rat(1));
      CHECK(inf_conv(m, add_const(f, c1), add_const(g, c2)) ==
            add_const(inf_conv(m, f, g), Rat(c1 + c2)));
    }
  }
  SUBCASE("lip1 is closed under convolution on invariant carriers") {
    const auto m = cyclic_group(6, testutil::cyclic_invariant_metric(rng, 6));
    for (int t = 0; t < 15; ++t) {
      const FnOnX f = gen::random_lip1(rng, m.metric, true);
      const FnOnX g = gen::random_lip1(rng, m.metric, true);
      CHECK(is_lip1(m, inf_conv(m, f, g)));
    }
  }
  SUBCASE("one-sided contraction gives the pointwise kuratowski bound") {
    // left projection satisfies d(yx,zx) <= d(y,z) and d(xy,xz) <= d(y,z)
    const auto proj = left_projection_magma(4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const FnOnX prod = inf_conv(proj, kuratowski(proj, a), kuratowski(proj, b));
        const FnOnX gam = kuratowski(proj, proj.op(a, b));
        for (int x = 0; x < 4; ++x) CHECK(gam[x] <= prod[x]);
      }
  }
  SUBCASE("equality on quasigroups") {
    const auto sub = subtraction_magma(5);
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        CHECK(inf_conv(sub, kuratowski(sub, a), kuratowski(sub, b)) ==
              kuratowski(sub, sub.op(a, b)));
  }
}
