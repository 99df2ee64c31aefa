#include <doctest.h>

#include "infconv/monoid_audit.hpp"
#include "test_util.hpp"

using namespace infconv;
using testutil::fn;

TEST_CASE("unit detection by canonical form") {
  const auto z5 = cyclic_group(5);
  const auto z2 = cyclic_group(2);

  SUBCASE("shifted kuratowski element") {
    const auto cert = is_unit(z5, add_const(kuratowski(z5, 2), rat(3, 4)));
    REQUIRE(cert.has_value());
    CHECK(cert->base == 2);
    CHECK(cert->shift == rat(3, 4));
    CHECK(cert->inverse == add_const(kuratowski(z5, 3), rat(-3, 4)));
  }
  SUBCASE("constant zero is not a unit") {
    CHECK_FALSE(is_unit(z2, FnOnX::constant(2, Rat(0))).has_value());
  }
  SUBCASE("identity element is self-inverse") {
    const auto cert = is_unit(z2, kuratowski(z2, 0));
    REQUIRE(cert.has_value());
    CHECK(cert->base == 0);
    CHECK(cert->shift == 0);
    CHECK(cert->inverse == kuratowski(z2, 0));
  }
  SUBCASE("positive-space audit accepts only zero shifts") {
    CHECK(is_unit(z5, kuratowski(z5, 1), UnitSpace::Lip1Plus).has_value());
    CHECK_FALSE(is_unit(z5, add_const(kuratowski(z5, 1), rat(1, 2)), UnitSpace::Lip1Plus)
                    .has_value());
  }
  SUBCASE("certificates compose") {
    gen::Rng rng(51);
    const auto d4 = dihedral_group(4);
    for (int t = 0; t < 12; ++t) {
      const int y1 = (int)rng.below(8), y2 = (int)rng.below(8);
      const Rat c1 = rng.rat_in(Rat(-1), Rat(1)), c2 = rng.rat_in(Rat(-1), Rat(1));
      const FnOnX f1 = add_const(kuratowski(d4, y1), c1);
      const FnOnX f2 = add_const(kuratowski(d4, y2), c2);
      const auto cert = is_unit(d4, inf_conv(d4, f1, f2));
      REQUIRE(cert.has_value());
      CHECK(cert->base == d4.op(y1, y2));
      CHECK(cert->shift == c1 + c2);
    }
  }
  SUBCASE("rejects non-group and non-invariant carriers") {
    CHECK_THROWS_AS(is_unit(subtraction_magma(5), FnOnX::constant(5, Rat(0))), HypothesisUnmet);
    CHECK_THROWS_AS(is_unit(left_projection_magma(3), FnOnX::constant(3, Rat(0))),
                    HypothesisUnmet);
  }
}

TEST_CASE("kuratowski image closure") {
  CHECK(kuratowski_closure(cyclic_group(5)).holds);
  CHECK(kuratowski_closure(subtraction_magma(5)).holds);

  SUBCASE("noncommutative carriers close but do not commute") {
    const auto d4 = dihedral_group(4);
    CHECK(kuratowski_closure(d4).holds);
    bool some_pair_noncommutative = false;
    for (int a = 0; a < 8 && !some_pair_noncommutative; ++a)
      for (int b = 0; b < 8 && !some_pair_noncommutative; ++b)
        some_pair_noncommutative = inf_conv(d4, kuratowski(d4, a), kuratowski(d4, b)) !=
                                   inf_conv(d4, kuratowski(d4, b), kuratowski(d4, a));
    CHECK(some_pair_noncommutative);
  }
  SUBCASE("non-invariant carriers are rejected") {
    CHECK_THROWS_AS(kuratowski_closure(left_projection_magma(3)), HypothesisUnmet);
  }
}

TEST_CASE("monoid probes") {
  SUBCASE("groups pass") {
    const auto rep = verify_int2(cyclic_group(7));
    CHECK(rep.holds);
    CHECK(rep.details.at("consistent_with_classification").get<bool>());
  }
  SUBCASE("subtraction quasigroup fails with a delta-triple witness") {
    const auto sub = subtraction_magma(5);
    const auto rep = verify_int2(sub);
    CHECK_FALSE(rep.holds);
    REQUIRE_FALSE(rep.violations.empty());
    // re-verify the reported triple through the engine
    const auto& w = rep.violations.at(0);
    REQUIRE(w.at("kind").get<std::string>() == "associativity");
    const int a = w.at("triple").at(0).get<int>();
    const int b = w.at("triple").at(1).get<int>();
    const int c = w.at("triple").at(2).get<int>();
    const std::vector<FnOnX> ds = {kuratowski(sub, a), kuratowski(sub, b), kuratowski(sub, c)};
    CHECK(n_fold_conv(sub, ds, left_fold_tree(3)) != n_fold_conv(sub, ds, right_fold_tree(3)));
    CHECK(rep.details.at("consistent_with_classification").get<bool>());
  }
  SUBCASE("nonassociative loop of order 5 fails") {
    const auto rep = verify_int2(smallest_nonassociative_loop());
    CHECK_FALSE(rep.holds);
    CHECK(rep.details.at("consistent_with_classification").get<bool>());
  }
}

TEST_CASE("argmin is a monoid morphism") {
  const auto z3 = cyclic_group(3);

  SUBCASE("worked pair") {
    const auto rep = argmin_morphism(z3, fn({"2", "1", "2"}), fn({"1", "1", "0"}));
    CHECK(rep.holds);
  }
  SUBCASE("kuratowski family on a dihedral carrier") {
    const auto d4 = dihedral_group(4);
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        const FnOnX f = kuratowski(d4, a);
        const FnOnX g = kuratowski(d4, b);
        CHECK(argmin_morphism(d4, f, g).holds);
        CHECK(strong_min(inf_conv(d4, f, g)) == d4.op(a, b));
      }
  }
  SUBCASE("invariant under positive shifts") {
    gen::Rng rng(61);
    const auto z6 = cyclic_group(6);
    for (int t = 0; t < 10; ++t) {
      FnOnX f = gen::random_lip1(rng, z6.metric, true);
      f = perturb_to_strong_min(z6, f, argmin_set(f)[0], rat(1, 4));
      FnOnX g = gen::random_lip1(rng, z6.metric, true);
      g = perturb_to_strong_min(z6, g, argmin_set(g)[0], rat(1, 4));
      const int before = *strong_min(inf_conv(z6, f, g));
      const FnOnX fshift = add_const(f, rat(7, 3));
      CHECK(argmin_morphism(z6, fshift, g).holds);
      CHECK(*strong_min(inf_conv(z6, fshift, g)) == before);
    }
  }
  SUBCASE("composition with a group homomorphism") {
    gen::Rng rng(67);
    const auto z6 = cyclic_group(6);
    const auto z3b = cyclic_group(3);
    const auto h = [](int x) { return x % 3; };
    for (int t = 0; t < 10; ++t) {
      FnOnX f = gen::random_lip1(rng, z6.metric, true);
      f = perturb_to_strong_min(z6, f, argmin_set(f)[0], rat(1, 4));
      FnOnX g = gen::random_lip1(rng, z6.metric, true);
      g = perturb_to_strong_min(z6, g, argmin_set(g)[0], rat(1, 4));
      const int lhs = h(*strong_min(inf_conv(z6, f, g)));
      const int rhs = z3b.op(h(*strong_min(f)), h(*strong_min(g)));
      CHECK(lhs == rhs);
    }
  }
  SUBCASE("rejects operands without strong minima") {
    CHECK_THROWS_AS(argmin_morphism(z3, FnOnX::constant(3, Rat(0)), kuratowski(z3, 0)),
                    InvariantViolation);
  }
}

TEST_CASE("canonical isomorphisms") {
  const auto z5 = cyclic_group(5);

  SUBCASE("doubling map on Z/5Z") {
    const std::vector<int> t = {0, 2, 4, 1, 3};  // T(k) = 2k
    const auto [phi, rep] = canonical_iso(z5, z5, t);
    CHECK(rep.holds);
    for (int x = 0; x < 5; ++x) CHECK(phi(kuratowski(z5, x)) == kuratowski(z5, t[x]));
  }
  SUBCASE("identity map") {
    const auto [phi, rep] = canonical_iso(z5, z5, {0, 1, 2, 3, 4});
    CHECK(rep.holds);
    const FnOnX f = fn({"1", "0", "1", "1", "1"});
    CHECK(phi(f) == f);
  }
  SUBCASE("tripling map on Z/8Z preserves the algebra exactly") {
    const auto z8 = cyclic_group(8);
    std::vector<int> t(8);
    for (int k = 0; k < 8; ++k) t[k] = (3 * k) % 8;
    const auto [phi, rep] = canonical_iso(z8, z8, t, 99);
    CHECK(rep.holds);

    gen::Rng rng(99);
    for (int s = 0; s < 10; ++s) {
      const FnOnX f = gen::random_katetov(rng, z8.metric);
      const FnOnX g = gen::random_katetov(rng, z8.metric);
      CHECK(phi(inf_conv(z8, f, g)) == inf_conv(z8, phi(f), phi(g)));
      CHECK(is_katetov(z8, phi(f)));  // membership is preserved
    }
  }
  SUBCASE("rejects non-homomorphisms and non-bijections") {
    CHECK_THROWS_AS(canonical_iso(z5, z5, {0, 0, 1, 2, 3}), InvariantViolation);
    CHECK_THROWS_AS(canonical_iso(z5, z5, {1, 2, 3, 4, 0}), InvariantViolation);
  }
}

TEST_CASE("cancellation fails in the convolution monoid") {
  const auto z3 = cyclic_group(3);

  SUBCASE("grid {0,1} provides a verified triple") {
    const auto triple = cancellation_search(z3, {Rat(0), Rat(1)});
    REQUIRE(triple.has_value());
    CHECK(triple->f != triple->h);
    CHECK(inf_conv(z3, triple->f, triple->g) == inf_conv(z3, triple->h, triple->g));
  }
  SUBCASE("singleton grid cannot separate") {
    CHECK_FALSE(cancellation_search(z3, {Rat(0)}).has_value());
  }
}

TEST_CASE("factorization witness") {
  const auto z5 = cyclic_group(5);

  SUBCASE("worked instance") {
    const auto w = factorization_witness(z5, kuratowski(z5, 0), 1, 2);
    CHECK(w.report.holds);
    CHECK(w.phi == kuratowski(z5, 3));  // delta_0 + delta_3 = delta_3
    CHECK(w.psi == kuratowski(z5, 2));
    CHECK(w.phi[1].finite() + w.psi[2].finite() == kuratowski(z5, 0)[z5.op(1, 2)].finite());
  }
  SUBCASE("factoring through the identity is trivial") {
    gen::Rng rng(71);
    const FnOnX f = gen::random_katetov(rng, z5.metric);
    const auto w = factorization_witness(z5, f, 3, 0);
    CHECK(w.report.holds);
    CHECK(w.phi == f);
    CHECK(w.psi == kuratowski(z5, 0));
  }
  SUBCASE("rejects non-katetov inputs") {
    CHECK_THROWS_AS(factorization_witness(z5, FnOnX::constant(5, Rat(0)), 0, 0),
                    InvariantViolation);
  }
}
