#include <doctest.h>

#include <cmath>

#include "flagdt/solver.hpp"
#include "test_helpers.hpp"

using namespace flagdt;
using namespace flagdt::testing;

TEST_CASE("solve_dt: the (1,1,0.6) family") {
  StructureParams p(1, 1, 0.6, 1, 1, 1);

  auto r3 = solve_dt(RootId::R3, p);
  REQUIRE(r3.size() == 2);
  CHECK(std::abs(r3[0].a) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(r3[0].a == doctest::Approx(-r3[1].a));
  for (const auto& s : r3) {
    CHECK(s.phi1 == 0.0);
    CHECK(s.phi2 == doctest::Approx(0.6).epsilon(1e-12));
    CHECK_FALSE(s.reducible);
    CHECK(s.residuals.max_filled() < 1e-10);
  }

  CHECK(solve_dt(RootId::R1, p).empty());
  CHECK(solve_dt(RootId::R2, p).empty());
}

TEST_CASE("solve_dt: nearly Kahler point is the all-reducible locus") {
  StructureParams nk(1, 1, 1, 1, 1, 1);
  for (RootId r : {RootId::R1, RootId::R2, RootId::R3}) {
    auto sols = solve_dt(r, nk);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].reducible);
    CHECK(sols[0].a == 0.0);
    CHECK(sols[0].phi1_degenerate);
    CHECK(sols[0].residuals.max_filled() < 1e-10);
  }
}

TEST_CASE("solve_dt: analytic equality case is flagged reducible") {
  // r3 wall: 2 A1^2 A2^2 = A3^2 (A1^2 + A2^2) at A = (1, sqrt2, 2/sqrt3)
  StructureParams p(1, std::sqrt(2.0), 2.0 / std::sqrt(3.0), 1, 1, 1);
  auto sols = solve_dt(RootId::R3, p);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].reducible);
  CHECK(sols[0].a == 0.0);
  CHECK(sols[0].residuals.max_filled() < 1e-10);
}

TEST_CASE("solve_dt: random eps=(1,1,1) parameters, strict branch closed forms") {
  Rng rng(501);
  int solved = 0;
  for (int it = 0; it < 60; ++it) {
    StructureParams p = rng.random_params_eps1();
    for (RootId r : {RootId::R1, RootId::R2, RootId::R3}) {
      const int i = static_cast<int>(r), j = (i + 1) % 3, k = (i + 2) % 3;
      const double mu = slope(root_weight(r), p);
      auto sols = solve_dt(r, p);
      if (mu < -1e-9) {
        REQUIRE(sols.size() == 2);
        CHECK(std::abs(sols[0].a) ==
              doctest::Approx(std::sqrt(-0.75 * p.A[i] * p.A[i] * mu)).epsilon(1e-12));
        CHECK(sols[0].phi1 == 0.0);
        CHECK(sols[0].phi2 == doctest::Approx(p.A[i] / (p.A[j] * p.A[k])).epsilon(1e-12));
        CHECK(sols[0].residuals.max_filled() < 1e-10);
        ++solved;
      } else if (mu > 1e-9) {
        CHECK(sols.empty());
      }
    }
  }
  CHECK(solved > 20);
}

TEST_CASE("solve_dt supports real eps satisfying the per-root identity") {
  // eps = (1, 2, 1): r1 identity eps1 eps2 - eps2 eps3 + eps1 eps3 = 2 - 2 + 1 = 1
  StructureParams p(1, 1, 1, 1, 2, 1);
  CHECK(root_eps_identity(RootId::R1, p) == doctest::Approx(1.0));
  auto sols = solve_dt(RootId::R1, p);
  REQUIRE(sols.size() == 2);
  CHECK(std::abs(sols[0].a) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sols[0].phi2 == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(sols[0].residuals.max_filled() < 1e-10);

  // identity violated: no irreducible solutions even with negative slope
  StructureParams q(1, 1, 1, 1, 2, 1.5);
  CHECK(std::abs(root_eps_identity(RootId::R1, q) - 1.0) > 0.1);
  CHECK(slope(root_weight(RootId::R1), q) < 0);
  CHECK(solve_dt(RootId::R1, q).empty());
}

TEST_CASE("solve_phym: Kahler-Einstein point and the integrable family") {
  StructureParams ke(1, 1, std::sqrt(2.0), 1, 1, -1);
  auto r1 = solve_phym(RootId::R1, ke);
  auto r2 = solve_phym(RootId::R2, ke);
  auto r3 = solve_phym(RootId::R3, ke);
  CHECK(r1.size() == 2);
  CHECK(r2.size() == 2);
  CHECK(r3.empty());
  for (const auto& s : r1) CHECK(s.residuals.max_filled() < 1e-10);
  CHECK(std::abs(r1[0].a) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-12));

  Rng rng(502);
  for (int it = 0; it < 30; ++it) {
    StructureParams p = rng.random_params_eps1();
    for (RootId r : {RootId::R1, RootId::R2, RootId::R3}) CHECK(solve_phym(r, p).empty());
  }

  // Corollary 3: on the integrable family, r1 or r2 always supports solutions
  for (int it = 0; it < 60; ++it) {
    StructureParams p(rng.amp(), rng.amp(), rng.amp(), 1, 1, -1);
    auto s1 = solve_phym(RootId::R1, p);
    auto s2 = solve_phym(RootId::R2, p);
    CHECK((!s1.empty() || !s2.empty()));
  }
}

TEST_CASE("existence summary: counts and the corollary dichotomy") {
  auto nk = existence_summary(StructureParams(1, 1, 1, 1, 1, 1));
  CHECK(nk.all_reducible);
  CHECK(nk.irreducible_roots == 0);
  CHECK(nk.total_solutions == 3);

  auto one = existence_summary(StructureParams(1, 1, 0.6, 1, 1, 1));
  CHECK(one.irreducible_roots == 1);
  CHECK(one.roots[2].irreducible);

  auto two = existence_summary(StructureParams(1, 1, 1.4, 1, 1, 1));
  CHECK(two.irreducible_roots == 2);
  CHECK(two.roots[0].irreducible);
  CHECK(two.roots[1].irreducible);

  Rng rng(503);
  for (int it = 0; it < 100; ++it) {
    auto sum = existence_summary(rng.random_params_eps1());
    CHECK(sum.total_solutions >= 1);
  }
  for (int it = 0; it < 10; ++it) {
    const double c = rng.amp();
    const double d = c * (1.0 + rng.uniform(0.01, 0.2));
    auto sum = existence_summary(StructureParams(c, c, d, 1, 1, 1));
    CHECK_FALSE(sum.all_reducible);
  }
}

TEST_CASE("Weyl action: root permutations and equivariance of the solvers") {
  CHECK(weyl_root(WeylElement::Sigma, RootId::R1) == RootId::R2);
  CHECK(weyl_root(WeylElement::Sigma, RootId::R2) == RootId::R3);
  CHECK(weyl_root(WeylElement::Sigma, RootId::R3) == RootId::R1);
  CHECK(weyl_root(WeylElement::Sigma,
                  weyl_root(WeylElement::Sigma, weyl_root(WeylElement::Sigma, RootId::R2))) ==
        RootId::R2);

  Rng rng(504);
  const std::vector<WeylElement> elems = {WeylElement::Sigma, WeylElement::SigmaSq,
                                          WeylElement::P1, WeylElement::P2, WeylElement::P3};
  for (int it = 0; it < 50; ++it) {
    StructureParams p = rng.random_params_eps1();
    WeylElement w = elems[rng.gen() % elems.size()];
    RootId r = static_cast<RootId>(rng.gen() % 3);

    auto base = solve_dt(r, p);
    auto image = solve_dt(weyl_root(w, r), weyl_params(w, p));
    REQUIRE(base.size() == image.size());
    for (std::size_t s = 0; s < base.size(); ++s) {
      CHECK(image[s].a == doctest::Approx(base[s].a).epsilon(1e-10));
      CHECK(image[s].phi2 == doctest::Approx(base[s].phi2).epsilon(1e-10));
      CHECK(image[s].reducible == base[s].reducible);
    }
  }
  // pHYM equivariance on the integrable family
  for (int it = 0; it < 25; ++it) {
    StructureParams p(rng.amp(), rng.amp(), rng.amp(), 1, 1, -1);
    WeylElement w = elems[rng.gen() % elems.size()];
    RootId r = static_cast<RootId>(rng.gen() % 3);
    auto base = solve_phym(r, p);
    auto image = solve_phym(weyl_root(w, r), weyl_params(w, p));
    REQUIRE(base.size() == image.size());
    for (std::size_t s = 0; s < base.size(); ++s)
      CHECK(image[s].a == doctest::Approx(base[s].a).epsilon(1e-10));
  }
}

TEST_CASE("scan grid hits landmarks exactly") {
  PathSpec path = builtin_path("example4", 0.5, 1.5, 101);
  CHECK(path.sample(0) == 0.5);
  CHECK(path.sample(50) == 1.0);
  CHECK(path.sample(100) == 1.5);
}

TEST_CASE("scan: example 4 closed forms") {
  PathSpec path = builtin_path("example4", 0.5, 1.5, 101);
  ScanTable table = scan(path, {RootId::R1, RootId::R2, RootId::R3});
  REQUIRE(table.rows.size() == 303);
  for (const auto& row : table.rows) {
    REQUIRE(row.valid);
    const double x = row.s;
    double a_expected = -1.0;
    if (row.root == RootId::R3)
      a_expected = 1.0 - x * x;
    else
      a_expected = 0.5 - 0.5 / (x * x);
    if (a_expected > 1e-12) {
      CHECK(row.has_solutions);
      CHECK(row.a_plus == doctest::Approx(std::sqrt(a_expected)).epsilon(1e-10));
      CHECK(row.a_minus == doctest::Approx(-std::sqrt(a_expected)).epsilon(1e-10));
      CHECK_FALSE(row.reducible);
    } else if (a_expected < -1e-12) {
      CHECK_FALSE(row.has_solutions);
    } else {
      CHECK(row.has_solutions);
      CHECK(row.reducible);
      CHECK(row.a_plus == 0.0);
    }
  }
  // all three roots reduce exactly at x = 1
  int at_wall = 0;
  for (const auto& row : table.rows)
    if (row.s == 1.0) {
      CHECK(row.has_solutions);
      CHECK(row.reducible);
      ++at_wall;
    }
  CHECK(at_wall == 3);
}

TEST_CASE("scan: example 5 always keeps an irreducible root") {
  PathSpec path = builtin_path("example5", 0.2, 1.2, 101);
  ScanTable table = scan(path, {RootId::R1, RootId::R2, RootId::R3});
  for (int i = 0; i < path.n; ++i) {
    bool any = false;
    for (int r = 0; r < 3; ++r) {
      const auto& row = table.rows[3 * i + r];
      REQUIRE(row.valid);
      any = any || (row.has_solutions && !row.reducible);
    }
    CHECK(any);
  }
}

TEST_CASE("scan: constant nearly Kahler path is all reducible") {
  PathSpec path = builtin_path("nk", 0.0, 1.0, 5);
  ScanTable table = scan(path, {RootId::R1, RootId::R2, RootId::R3});
  for (const auto& row : table.rows) {
    CHECK(row.has_solutions);
    CHECK(row.reducible);
  }
  // the path runs along the wall without crossing it: no events
  for (RootId r : {RootId::R1, RootId::R2, RootId::R3}) CHECK(wall_cross(path, r).empty());
}

TEST_CASE("wall crossing: corollary 4 family") {
  PathSpec path = builtin_path("corollary4", 0.9, 1.1, 21);
  auto events = wall_cross(path, RootId::R1);
  REQUIRE(events.size() == 1);
  CHECK(std::abs(events[0].s - 1.0) < 1e-8);
  CHECK(events[0].solutions_below);

  // solutions exist on s < 1 only
  auto below = solve_phym(RootId::R1, path.at(0.95));
  auto above = solve_phym(RootId::R1, path.at(1.05));
  CHECK(below.size() == 2);
  CHECK(above.empty());
}

TEST_CASE("wall crossing: example 4, root r3 walls at x = 1") {
  PathSpec path = builtin_path("example4", 0.5, 1.5, 11);
  auto events = wall_cross(path, RootId::R3);
  REQUIRE(events.size() == 1);
  CHECK(std::abs(events[0].s - 1.0) < 1e-8);
  CHECK(events[0].solutions_below);

  PathSpec constant = builtin_path("example4", 0.6, 0.8, 5);
  CHECK(wall_cross(constant, RootId::R3).empty());
}

TEST_CASE("solver rejects malformed inputs") {
  CHECK_THROWS_AS(builtin_path("nope", 0, 1, 5), InvalidParams);
  CHECK_THROWS_AS(builtin_path("example4", 0, 1, 1), InvalidParams);
  CHECK_THROWS_AS(root_from_name("r9"), InvalidParams);
}
