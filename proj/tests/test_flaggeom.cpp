#include <doctest.h>

#include "flagdt/flaggeom.hpp"
#include "test_helpers.hpp"

using namespace flagdt;
using namespace flagdt::testing;

TEST_CASE("build_structure: omega expansion and volume form") {
  InvariantStructure s(StructureParams(1, 1, 1, 1, 1, 1));
  CForm expect;
  for (int i = 0; i < 3; ++i)
    expect.add(static_cast<Mono>((Mono(1) << (2 + 2 * i)) | (Mono(1) << (3 + 2 * i))),
               Complex(1, 0));
  CHECK((s.omega - expect).max_abs_coeff() < 1e-14);

  Rng rng(201);
  for (int it = 0; it < 10; ++it) {
    StructureParams p = rng.random_params_real();
    InvariantStructure sp(p);
    const double vol = p.eps[0] * p.eps[1] * p.eps[2] * p.A[0] * p.A[0] * p.A[1] * p.A[1] *
                       p.A[2] * p.A[2];
    CHECK((sp.dvol - CForm::monomial(kTopMono, Complex(vol, 0))).max_abs_coeff() < 1e-12);
    // omega^3/3! = dvol
    CForm om3 = wedge(sp.omega, wedge(sp.omega, sp.omega));
    CHECK((Complex(1.0 / 6.0, 0) * om3 - sp.dvol).max_abs_coeff() < 1e-11);
  }
}

TEST_CASE("SU(3)-structure compatibility on the basic-Omega family") {
  Rng rng(202);
  for (int it = 0; it < 10; ++it) {
    StructureParams p = rng.random_params_eps1();
    InvariantStructure s(p);
    CHECK(wedge(s.omega, s.Omega1).max_abs_coeff() < 1e-12);
    // omega^3 = (3/2) Omega1 ^ Omega2 with Omega = alpha1^alpha2^alpha3
    CForm om3 = wedge(s.omega, wedge(s.omega, s.omega));
    CForm rhs = Complex(1.5, 0) * wedge(s.Omega1, s.Omega2);
    CHECK((om3 - rhs).max_abs_coeff() < 1e-11);
  }
}

TEST_CASE("nijenhuis closed form values") {
  auto n = nijenhuis(StructureParams(1, 1, 1, 1, 1, 1));
  CHECK(n[0] == doctest::Approx(1.0));
  CHECK(n[1] == doctest::Approx(1.0));
  CHECK(n[2] == doctest::Approx(1.0));

  auto n2 = nijenhuis(StructureParams(2, 1, 1, 1, 1, 1));
  CHECK(n2[0] == doctest::Approx(2.0));
  CHECK(n2[1] == doctest::Approx(0.5));
  CHECK(n2[2] == doctest::Approx(0.5));

  Rng rng(203);
  for (int it = 0; it < 5; ++it) {
    auto nz = nijenhuis(StructureParams(rng.amp(), rng.amp(), rng.amp(), 1, 1, -1));
    for (double v : nz) CHECK(std::abs(v) < 1e-13);
  }
}

TEST_CASE("nijenhuis dual route over sign patterns and real eps") {
  Rng rng(204);
  for (int mask = 0; mask < 8; ++mask) {
    const double e1 = (mask & 1) ? 1 : -1, e2 = (mask & 2) ? 1 : -1, e3 = (mask & 4) ? 1 : -1;
    for (int it = 0; it < 10; ++it) {
      StructureParams p(rng.amp(), rng.amp(), rng.amp(), e1, e2, e3);
      auto n = nijenhuis(p);  // throws on route mismatch
      // integrability test (Eq 4.2) iff zero tensor, on the lattice
      const bool eq42 = std::abs(e1 * e2 + e1 * e3 + e2 * e3 + 1) < 1e-12;
      const bool zero = std::abs(n[0]) < 1e-12 && std::abs(n[1]) < 1e-12 && std::abs(n[2]) < 1e-12;
      CHECK(eq42 == zero);
    }
  }
  for (int it = 0; it < 25; ++it) CHECK_NOTHROW(nijenhuis(rng.random_params_real()));
}

TEST_CASE("d_omega_decompose: nearly Kahler anchor and symplectic locus") {
  InvariantStructure nk(StructureParams(1, 1, 1, 1, 1, 1));
  auto dec = d_omega_decompose(nk);
  CHECK((dec.d_omega - Complex(3, 0) * nk.Omega1).max_abs_coeff() < 1e-13);

  // eps = (1,1,-1) with A1^2 + A2^2 = A3^2: symplectic, d(omega) = 0
  InvariantStructure sympl(StructureParams(1.2, 0.9, std::sqrt(1.44 + 0.81), 1, 1, -1));
  auto dec2 = d_omega_decompose(sympl);
  CHECK(dec2.d_omega.max_abs_coeff() < 1e-12);

  // eps = (1,1,1), A = (1,1,2): d(omega) = ((1+1+4)/(1*1*2)) Omega1 = 3 Omega1
  InvariantStructure s3(StructureParams(1, 1, 2, 1, 1, 1));
  auto dec3 = d_omega_decompose(s3);
  CHECK((dec3.d_omega - Complex(3, 0) * s3.Omega1).max_abs_coeff() < 1e-12);

  Rng rng(205);
  for (int it = 0; it < 15; ++it)
    CHECK_NOTHROW(d_omega_decompose(build_structure(rng.random_params_real())));
}

TEST_CASE("eps=(1,1,1) family: half flat with the Eq 4.8 coefficient") {
  Rng rng(206);
  for (int it = 0; it < 15; ++it) {
    StructureParams p = rng.random_params_eps1();
    InvariantStructure s(p);
    CHECK(exterior_derivative(s.Omega1).max_abs_coeff() < 1e-12);
    const double c = (p.A[0] * p.A[0] + p.A[1] * p.A[1] + p.A[2] * p.A[2]) /
                     (p.A[0] * p.A[1] * p.A[2]);
    CHECK((exterior_derivative(s.omega) - Complex(c, 0) * s.Omega1).max_abs_coeff() < 1e-11);
    CHECK(classify(p).half_flat);
    CHECK_FALSE(classify(p).symplectic);  // J^ni tames no symplectic form
  }
}

TEST_CASE("classification flags at the named points") {
  ClassificationFlags nk = classify(StructureParams(1, 1, 1, 1, 1, 1));
  CHECK(nk.nearly_kahler_up_to_scale);
  CHECK(nk.half_flat);
  CHECK_FALSE(nk.integrable);
  CHECK_FALSE(nk.kahler);

  ClassificationFlags ke = classify(StructureParams(1, 1, std::sqrt(2.0), 1, 1, -1));
  CHECK(ke.integrable);
  CHECK(ke.symplectic);
  CHECK(ke.kahler);
  CHECK(ke.kahler_einstein);
  CHECK_FALSE(ke.nearly_kahler_up_to_scale);

  // scaled nearly Kahler point stays in the class
  ClassificationFlags nk2 = classify(StructureParams(0.7, 0.7, 0.7, 1, 1, 1));
  CHECK(nk2.nearly_kahler_up_to_scale);

  // Weyl image of the KE point
  ClassificationFlags ke2 = classify(StructureParams(1, std::sqrt(2.0), 1, -1, 1, -1));
  CHECK(ke2.kahler_einstein);
}

TEST_CASE("flag implications hold on random parameters") {
  Rng rng(207);
  for (int it = 0; it < 40; ++it) {
    StructureParams p = (it % 2 == 0) ? rng.random_params_lattice() : rng.random_params_real();
    ClassificationFlags f = classify(p);
    if (f.kahler) {
      CHECK(f.integrable);
      CHECK(f.symplectic);
    }
    if (f.nearly_kahler_up_to_scale) CHECK(f.half_flat);
  }
}

TEST_CASE("exact classification agrees with the float path on rational input") {
  RationalParams rp;
  rp.A = {Rational(1), Rational(1), Rational(1)};
  rp.eps = {Rational(1), Rational(1), Rational(1)};
  ClassificationFlags e = classify_exact(rp);
  CHECK(e.nearly_kahler_up_to_scale);
  CHECK(e.half_flat);
  CHECK_FALSE(e.integrable);

  RationalParams sym;
  sym.A = {Rational(1), Rational(1), Rational(1)};
  sym.eps = {Rational(1), Rational(1), Rational(-2)};
  ClassificationFlags es = classify_exact(sym);
  CHECK(es.symplectic);   // 1 + 1 - 2 = 0 exactly
  CHECK_FALSE(es.integrable);

  // A3^2 = 4 != 2 A1^2: integrable but not Kahler-Einstein
  RationalParams hermitian;
  hermitian.A = {Rational(1), Rational(1), Rational(2)};
  hermitian.eps = {Rational(1), Rational(1), Rational(-1)};
  ClassificationFlags ek = classify_exact(hermitian);
  CHECK(ek.integrable);
  CHECK_FALSE(ek.kahler_einstein);

  // exact Kahler-Einstein point with rational A: A = (1,1,?) needs sqrt(2);
  // scale to A = (5,5,?) ... instead take eps pattern with A^2 ratios exact:
  // no rational point exists on A3^2 = 2 A1^2 with A1 = A3, so use the
  // closed-form check indirectly through the float path.
  CHECK(classify(StructureParams(1, 1, std::sqrt(2.0), 1, 1, -1)).kahler_einstein);
}

TEST_CASE("Weyl action on parameters: group relations") {
  Rng rng(208);
  StructureParams p = rng.random_params_real();
  StructureParams s3 = weyl_params(WeylElement::Sigma,
                                   weyl_params(WeylElement::Sigma,
                                               weyl_params(WeylElement::Sigma, p)));
  for (int i = 0; i < 3; ++i) {
    CHECK(s3.A[i] == p.A[i]);
    CHECK(s3.eps[i] == p.eps[i]);
  }
  StructureParams p1sq = weyl_params(WeylElement::P1, weyl_params(WeylElement::P1, p));
  for (int i = 0; i < 3; ++i) {
    CHECK(p1sq.A[i] == p.A[i]);
    CHECK(p1sq.eps[i] == p.eps[i]);
  }
  // sigma = p1 o p2 (as maps on parameters)
  StructureParams lhs = weyl_params(WeylElement::Sigma, p);
  StructureParams rhs = weyl_params(WeylElement::P1, weyl_params(WeylElement::P2, p));
  for (int i = 0; i < 3; ++i) {
    CHECK(lhs.A[i] == rhs.A[i]);
    CHECK(lhs.eps[i] == rhs.eps[i]);
  }
}
