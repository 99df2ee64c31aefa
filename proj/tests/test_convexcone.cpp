#include <doctest.h>

#include "infconv/convexcone.hpp"
#include "infconv/generate.hpp"
#include "oracles.hpp"

using namespace infconv;

namespace {
using BP = std::vector<std::pair<Rat, Rat>>;
}

TEST_CASE("construction and canonical form") {
  SUBCASE("collinear breakpoints coalesce") {
    const PLKatetovFn f(BP{{Rat(0), Rat(1)}, {Rat(1), Rat(1)}, {Rat(2), Rat(1)}});
    CHECK(f.breakpoints().size() == 2);  // middle point is redundant
    CHECK(f(rat(1, 2)) == 1);
  }
  SUBCASE("tail-slope segments fold into the tails") {
    const PLKatetovFn f(BP{{Rat(-1), Rat(1)}, {Rat(0), Rat(0)}, {Rat(3), Rat(3)}});
    CHECK(f == PLKatetovFn::gamma(0));
  }
  SUBCASE("invalid shapes are rejected") {
    CHECK_THROWS_AS(PLKatetovFn(BP{}), InvariantViolation);
    CHECK_THROWS_AS(PLKatetovFn(BP{{Rat(0), Rat(0)}, {Rat(0), Rat(1)}}), InvariantViolation);
    // slope outside [-1,1]
    CHECK_THROWS_AS(PLKatetovFn(BP{{Rat(0), Rat(0)}, {Rat(1), Rat(2)}}), InvariantViolation);
    // decreasing slopes (nonconvex)
    CHECK_THROWS_AS(
        PLKatetovFn(BP{{Rat(0), Rat(0)}, {Rat(1), rat(1, 2)}, {Rat(2), rat(1, 2)}}),
        InvariantViolation);
    // katetov margin negative: gamma(0) - 1
    CHECK_THROWS_AS(PLKatetovFn(BP{{Rat(0), Rat(-1)}}), InvariantViolation);
  }
  SUBCASE("evaluation on tails and segments") {
    const PLKatetovFn f(BP{{Rat(0), Rat(1)}, {Rat(2), Rat(1)}});
    CHECK(f(Rat(-3)) == 4);
    CHECK(f(Rat(1)) == 1);
    CHECK(f(Rat(5)) == 4);
    CHECK(f.min_value() == 1);
    CHECK(f.c_minus() == 1);
    CHECK(f.c_plus() == -1);
    CHECK(f.katetov_margin() == 0);
  }
}

TEST_CASE("the closed katetov test matches the grid oracle") {
  gen::Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    // raw convex 1-Lipschitz shape, sometimes violating the katetov bound
    const PLKatetovFn base = gen::random_pl(rng, 4);
    BP bps = base.breakpoints();
    const Rat drop = rng.rat_in(Rat(0), Rat(2));
    for (auto& [x, v] : bps) v -= drop;
    const Rat margin = (bps.back().second - bps.back().first) +
                       (bps.front().second + bps.front().first);
    CHECK((margin >= 0) == oracle::pl_katetov_by_grid(bps));
    if (margin >= 0)
      CHECK_NOTHROW((void)PLKatetovFn{bps});
    else
      CHECK_THROWS_AS((void)PLKatetovFn{bps}, InvariantViolation);
  }
}

TEST_CASE("inf-convolution by slope merge") {
  SUBCASE("kuratowski elements add their anchors") {
    CHECK(pl_infconv(PLKatetovFn::gamma(1), PLKatetovFn::gamma(-1)) == PLKatetovFn::gamma(0));
    CHECK(pl_infconv(PLKatetovFn::gamma(0), PLKatetovFn::gamma(0)) == PLKatetovFn::gamma(0));
  }
  SUBCASE("constants add") {
    const PLKatetovFn a(BP{{Rat(0), Rat(1)}});
    const PLKatetovFn b(BP{{Rat(0), Rat(2)}});
    CHECK(pl_infconv(a, b) == PLKatetovFn(BP{{Rat(0), Rat(3)}}));
  }
  SUBCASE("matches the split-point oracle at sampled abscissae") {
    gen::Rng rng(11);
    for (int t = 0; t < 40; ++t) {
      const PLKatetovFn f = gen::random_pl(rng, 5);
      const PLKatetovFn g = gen::random_pl(rng, 5);
      const PLKatetovFn conv = pl_infconv(f, g);
      for (int s = 0; s < 12; ++s) {
        const Rat x = rng.rat_in(Rat(-12), Rat(12), 48);
        CHECK(conv(x) == oracle::pl_conv_at(f, g, x));
      }
      // the asymptotic intercepts are additive
      CHECK(conv.c_plus() == f.c_plus() + g.c_plus());
      CHECK(conv.c_minus() == f.c_minus() + g.c_minus());
      CHECK(conv.min_value() == f.min_value() + g.min_value());
    }
  }
  SUBCASE("commutative and associative") {
    gen::Rng rng(13);
    for (int t = 0; t < 25; ++t) {
      const PLKatetovFn f = gen::random_pl(rng, 4);
      const PLKatetovFn g = gen::random_pl(rng, 4);
      const PLKatetovFn h = gen::random_pl(rng, 4);
      CHECK(pl_infconv(f, g) == pl_infconv(g, f));
      CHECK(pl_infconv(pl_infconv(f, g), h) == pl_infconv(f, pl_infconv(g, h)));
    }
  }
  SUBCASE("gamma(0) is the identity") {
    gen::Rng rng(17);
    for (int t = 0; t < 20; ++t) {
      const PLKatetovFn f = gen::random_pl(rng, 5);
      CHECK(pl_infconv(PLKatetovFn::gamma(0), f) == f);
    }
  }
}

TEST_CASE("epigraph scaling") {
  CHECK(epi_scale(Rat(2), PLKatetovFn::gamma(0)) == PLKatetovFn::gamma(0));
  CHECK(epi_scale(rat(1, 2), PLKatetovFn(BP{{Rat(0), Rat(3)}})) ==
        PLKatetovFn(BP{{Rat(0), rat(3, 2)}}));
  CHECK(epi_scale(Rat(0), PLKatetovFn(BP{{Rat(4), Rat(2)}})) == PLKatetovFn::gamma(0));
  CHECK_THROWS_AS(epi_scale(Rat(-1), PLKatetovFn::gamma(0)), InvariantViolation);

  SUBCASE("scaling keeps slopes and scales intercepts") {
    gen::Rng rng(19);
    for (int t = 0; t < 20; ++t) {
      const PLKatetovFn f = gen::random_pl(rng, 5);
      const Rat lam = rng.rat_in(rat(1, 4), Rat(3));
      const PLKatetovFn s = epi_scale(lam, f);
      CHECK(s.slopes() == f.slopes());
      CHECK(s.c_plus() == lam * f.c_plus());
      CHECK(s.c_minus() == lam * f.c_minus());
    }
  }
}

TEST_CASE("sup distance") {
  CHECK(pl_dinf(PLKatetovFn::gamma(rat(-7, 2)), PLKatetovFn::gamma(0)) == rat(7, 2));
  CHECK(pl_dinf(PLKatetovFn(BP{{Rat(0), Rat(2)}}), PLKatetovFn::gamma(0)) == 2);

  SUBCASE("matches the probe oracle on random pairs") {
    gen::Rng rng(23);
    for (int t = 0; t < 40; ++t) {
      const PLKatetovFn f = gen::random_pl(rng, 5);
      const PLKatetovFn g = gen::random_pl(rng, 5);
      CHECK(pl_dinf(f, g) == oracle::pl_dinf(f, g));
      CHECK(pl_dinf(f, f) == 0);
    }
  }
  SUBCASE("evaluation identity against kuratowski elements") {
    gen::Rng rng(29);
    for (int t = 0; t < 25; ++t) {
      const PLKatetovFn f = gen::random_pl(rng, 5);
      const Rat x = rng.rat_in(Rat(-10), Rat(10), 40);
      CHECK(pl_dinf(PLKatetovFn::gamma(x), f) == f(x));
    }
  }
}

TEST_CASE("banach structure on the kuratowski image") {
  CHECK(banach_scale_gamma(Rat(-1), Rat(3)) == PLKatetovFn::gamma(-3));
  CHECK(banach_norm(PLKatetovFn::gamma(rat(-7, 2))) == rat(7, 2));

  gen::Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    const Rat a = rng.rat_in(Rat(-8), Rat(8), 32);
    const Rat b = rng.rat_in(Rat(-8), Rat(8), 32);
    CHECK(pl_infconv(PLKatetovFn::gamma(a), PLKatetovFn::gamma(b)) ==
          PLKatetovFn::gamma(Rat(a + b)));
    const Rat lam = rng.rat_in(Rat(-3), Rat(3), 24);
    CHECK(banach_scale_gamma(lam, a) == PLKatetovFn::gamma(Rat(lam * a)));
    CHECK(banach_norm(PLKatetovFn::gamma(a)) == rat_abs(a));
  }
}

TEST_CASE("cone axioms") {
  const auto rep = verify_cone_axioms(100, 12345);
  CHECK(rep.holds);
  CHECK(rep.checks == 100);

  SUBCASE("halving a kuratowski element splits it") {
    const PLKatetovFn c = PLKatetovFn::gamma(5);
    const PLKatetovFn half = epi_scale(rat(1, 2), c);
    CHECK(half == PLKatetovFn::gamma(rat(5, 2)));
    CHECK(pl_infconv(half, half) == c);
  }
}

TEST_CASE("contraction fixed point") {
  SUBCASE("identity target fixes gamma(0) in one step") {
    const auto res = fixed_point_solve(rat(1, 2), PLKatetovFn::gamma(0), rat(1, 100));
    CHECK(res.converged);
    CHECK(res.iterations == 1);
    CHECK(res.fixed == PLKatetovFn::gamma(0));
    CHECK(res.residual == 0);
  }
  SUBCASE("closed-form fixed point of the shifted norm") {
    const PLKatetovFn g(BP{{Rat(0), Rat(1)}});  // |x| + 1
    const Rat tol = rat(1, 1000000000);
    const auto res = fixed_point_solve(rat(1, 2), g, tol);
    REQUIRE(res.converged);
    CHECK(res.iterations <= 40);
    CHECK(res.residual <= tol);
    CHECK(pl_dinf(res.fixed, PLKatetovFn(BP{{Rat(0), Rat(2)}})) <= tol);
  }
  SUBCASE("slope inventory stays inside slopes(f) union slopes(g)") {
    gen::Rng rng(37);
    const PLKatetovFn g = gen::random_pl(rng, 4);
    PLKatetovFn f = PLKatetovFn::gamma(0);
    const auto allowed = [&](const PLKatetovFn& h) {
      for (const Rat& s : h.slopes()) {
        bool found = false;
        for (const Rat& t : g.slopes()) found = found || t == s;
        for (const Rat& t : f.slopes()) found = found || t == s;
        if (!found) return false;
      }
      return true;
    };
    for (int it = 0; it < 8; ++it) {
      const PLKatetovFn next = pl_infconv(epi_scale(rat(1, 2), f), g);
      CHECK(allowed(next));
      CHECK(next.breakpoints().size() <= g.breakpoints().size() + f.breakpoints().size());
      f = next;
    }
  }
  SUBCASE("the iteration map is a contraction") {
    gen::Rng rng(41);
    const PLKatetovFn g = gen::random_pl(rng, 4);
    const Rat lam = rat(1, 2);
    for (int t = 0; t < 25; ++t) {
      const PLKatetovFn f1 = gen::random_pl(rng, 4);
      const PLKatetovFn f2 = gen::random_pl(rng, 4);
      const PLKatetovFn l1 = pl_infconv(epi_scale(lam, f1), g);
      const PLKatetovFn l2 = pl_infconv(epi_scale(lam, f2), g);
      CHECK(pl_dinf(l1, l2) <= lam * pl_dinf(f1, f2));
    }
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(fixed_point_solve(Rat(1), PLKatetovFn::gamma(0), Rat(1)),
                    InvariantViolation);
    CHECK_THROWS_AS(fixed_point_solve(rat(1, 2), PLKatetovFn::gamma(0), Rat(0)),
                    InvariantViolation);
  }
}

TEST_CASE("cone isomorphisms of the line") {
  CHECK(verify_cone_iso(false, 50, 7).holds);
  CHECK(verify_cone_iso(true, 50, 7).holds);

  SUBCASE("reflection maps gamma(2) to gamma(-2)") {
    const auto rep = verify_cone_iso(true, 1, 1);
    CHECK(rep.holds);
    // direct check of the breakpoint reflection
    const PLKatetovFn f = PLKatetovFn::gamma(2);
    BP reflected(f.breakpoints().rbegin(), f.breakpoints().rend());
    for (auto& [x, v] : reflected) x = -x;
    CHECK(PLKatetovFn(reflected) == PLKatetovFn::gamma(-2));
  }
}
