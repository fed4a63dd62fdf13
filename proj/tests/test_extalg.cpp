#include <doctest.h>

#include "flagdt/frame.hpp"
#include "flagdt/structure.hpp"
#include "test_helpers.hpp"

using namespace flagdt;
using namespace flagdt::testing;

namespace {

CForm cbasis(CoframeIndex i) { return CForm::basis(i); }

CForm random_homogeneous(Rng& rng, int deg, bool semibasic_only) {
  CForm f;
  for (int tries = 0; tries < 12; ++tries) {
    Mono m = 0;
    while (mono_degree(m) < deg) {
      int lo = semibasic_only ? 2 : 0;
      int b = lo + static_cast<int>(rng.gen() % static_cast<unsigned>(8 - lo));
      m |= Mono(1) << b;
    }
    f.add(m, Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)));
  }
  return f;
}

} // namespace

TEST_CASE("wedge basics") {
  CForm e1 = cbasis(CoframeIndex::Eta1);
  CForm t1 = cbasis(CoframeIndex::Theta1);
  CHECK(wedge(e1, e1).is_zero());
  CHECK((wedge(e1, t1) + wedge(t1, e1)).is_zero());

  // alpha1 ^ conj(alpha1) = -2 i eps1 A1^2 eta1^theta1, expanded by hand:
  // A(e + i eps t) ^ A(e - i eps t) = -2 i eps A^2 e^t.
  Rng rng(101);
  for (int it = 0; it < 10; ++it) {
    StructureParams p = rng.random_params_real();
    Frame fr(p);
    CForm lhs = wedge(fr.alpha(0), fr.alpha_bar(0));
    CForm expect = CForm::monomial(0b00001100, Complex(0.0, -2.0 * p.eps[0] * p.A[0] * p.A[0]));
    CHECK((lhs - expect).max_abs_coeff() < 1e-14);
  }
}

TEST_CASE("wedge is graded anticommutative and associative") {
  Rng rng(102);
  for (int it = 0; it < 20; ++it) {
    int da = 1 + static_cast<int>(rng.gen() % 3);
    int db = 1 + static_cast<int>(rng.gen() % 3);
    CForm a = random_homogeneous(rng, da, false);
    CForm b = random_homogeneous(rng, db, false);
    CForm c = random_homogeneous(rng, 1, false);
    double sign = (da * db) % 2 == 0 ? 1.0 : -1.0;
    CHECK((wedge(a, b) - Complex(sign, 0.0) * wedge(b, a)).max_abs_coeff() < 1e-12);
    CHECK((wedge(wedge(a, b), c) - wedge(a, wedge(b, c))).max_abs_coeff() < 1e-12);
  }
}

TEST_CASE("structure table: d^2 = 0 exactly") {
  auto res = StructureTable::instance().d_squared_residuals();
  for (const auto& r : res) CHECK(r.is_zero());
}

TEST_CASE("exterior derivative satisfies the graded Leibniz rule") {
  Rng rng(103);
  for (int it = 0; it < 15; ++it) {
    int da = 1 + static_cast<int>(rng.gen() % 2);
    CForm a = random_homogeneous(rng, da, false);
    CForm b = random_homogeneous(rng, 2, false);
    CForm lhs = exterior_derivative(wedge(a, b));
    CForm rhs = wedge(exterior_derivative(a), b) +
                Complex(da % 2 == 0 ? 1.0 : -1.0, 0.0) * wedge(a, exterior_derivative(b));
    CHECK((lhs - rhs).max_abs_coeff() < 1e-12);
  }
}

TEST_CASE("d^2 = 0 on random forms, exact backend") {
  Rng rng(104);
  for (int it = 0; it < 10; ++it) {
    QForm f;
    for (int t = 0; t < 10; ++t)
      f.add(static_cast<Mono>(rng.gen() & 0xFF),
            Rational(static_cast<long>(rng.gen() % 19) - 9, 1 + static_cast<long>(rng.gen() % 7)));
    CHECK(exterior_derivative(exterior_derivative(f)).is_zero());
  }
}

TEST_CASE("d(k b1 + l b2) reproduces the alpha-basis expansion") {
  Rng rng(105);
  for (int it = 0; it < 20; ++it) {
    StructureParams p = rng.random_params_real();
    Frame fr(p);
    long k = rng.weight_entry(), l = rng.weight_entry();
    CForm beta = Complex(double(k), 0) * cbasis(CoframeIndex::Beta1) +
                 Complex(double(l), 0) * cbasis(CoframeIndex::Beta2);
    CForm lhs = exterior_derivative(beta);
    Complex I(0, 1);
    CForm rhs = (I * double(l) / (p.eps[0] * p.A[0] * p.A[0])) * wedge(fr.alpha(0), fr.alpha_bar(0));
    rhs += (-I * double(k) / (p.eps[1] * p.A[1] * p.A[1])) * wedge(fr.alpha(1), fr.alpha_bar(1));
    rhs += (I * double(k - l) / (p.eps[2] * p.A[2] * p.A[2])) * wedge(fr.alpha(2), fr.alpha_bar(2));
    CHECK((lhs - rhs).max_abs_coeff() < 1e-12);
  }
}

TEST_CASE("d(omega^2) = 0 in both backends") {
  Rng rng(106);
  for (int it = 0; it < 10; ++it) {
    StructureParams p = rng.random_params_real();
    Frame fr(p);
    CForm om2 = wedge(fr.omega(), fr.omega());
    CHECK(exterior_derivative(om2).max_abs_coeff() < 1e-12);
  }
  // exact: rational parameters
  RationalParams rp;
  rp.A = {Rational(3, 2), Rational(7, 5), Rational(2)};
  rp.eps = {Rational(1), Rational(-4, 3), Rational(5, 7)};
  QForm omega;
  for (int i = 0; i < 3; ++i) {
    Mono m = static_cast<Mono>((Mono(1) << (2 + 2 * i)) | (Mono(1) << (3 + 2 * i)));
    omega.add(m, rp.eps[i] * rp.A[i] * rp.A[i]);
  }
  CHECK(exterior_derivative(wedge(omega, omega)).is_zero());
}

TEST_CASE("hodge star: unit, display, involution, isometry") {
  Rng rng(107);
  StructureParams p = rng.random_params_real();
  Frame fr(p);

  CForm one = CForm::scalar(Complex(1, 0));
  CHECK((fr.star(one) - fr.dvol()).max_abs_coeff() < 1e-12);

  CForm re_a1 = re(fr.alpha(0));
  CForm expect = wedge(im(fr.alpha(0)),
                       wedge(re(fr.alpha(1)), wedge(im(fr.alpha(1)),
                                                    wedge(re(fr.alpha(2)), im(fr.alpha(2))))));
  CHECK((fr.star(re_a1) - expect).max_abs_coeff() < 1e-12);

  for (int deg = 0; deg <= 6; ++deg) {
    CForm f = random_homogeneous(rng, deg, true);
    double sign = deg % 2 == 0 ? 1.0 : -1.0;
    CHECK((fr.star(fr.star(f)) - Complex(sign, 0.0) * f).max_abs_coeff() < 1e-10);
    CHECK(fr.norm(fr.star(f)) == doctest::Approx(fr.norm(f)).epsilon(1e-10));
  }

  CForm vertical = cbasis(CoframeIndex::Beta1);
  CHECK_THROWS_AS(fr.star(vertical), NonSemibasic);
}

TEST_CASE("type projection: pseudo-holomorphy of d(beta), identity resolution, conjugation") {
  Rng rng(108);
  for (int it = 0; it < 8; ++it) {
    StructureParams p = rng.random_params_real();
    Frame fr(p);

    long k = rng.weight_entry(), l = rng.weight_entry();
    CForm db = exterior_derivative(Complex(double(k), 0) * cbasis(CoframeIndex::Beta1) +
                                   Complex(double(l), 0) * cbasis(CoframeIndex::Beta2));
    CHECK(fr.norm(fr.type_project(db, 0, 2)) < 1e-12);

    int deg = 2 + static_cast<int>(rng.gen() % 2);
    CForm f = random_homogeneous(rng, deg, true);
    CForm sum;
    for (int a = 0; a <= deg; ++a) sum += fr.type_project(f, a, deg - a);
    CHECK((sum - f).max_abs_coeff() < 1e-9);

    CForm pr = fr.type_project(f, 1, deg - 1);
    CHECK((fr.type_project(pr, 1, deg - 1) - pr).max_abs_coeff() < 1e-9);
    CHECK((conj(fr.type_project(f, 1, deg - 1)) - fr.type_project(conj(f), deg - 1, 1))
              .max_abs_coeff() < 1e-9);
  }
}

TEST_CASE("type projection of d(alpha_1): pure (0,2) coefficient matches the Nijenhuis entry") {
  Rng rng(109);
  for (int it = 0; it < 6; ++it) {
    StructureParams p = rng.random_params_real();
    Frame fr(p);
    CForm dalpha = exterior_derivative(fr.alpha(0)).semibasic_part();
    CForm p02 = fr.type_project(dalpha, 0, 2);
    const double n11 = p.A[0] * (p.eps[0] * p.eps[1] * p.eps[2] + p.eps[0] + p.eps[1] + p.eps[2]) /
                       (4.0 * p.eps[1] * p.eps[2] * p.A[1] * p.A[2]);
    CForm expect = (Complex(0, -1) * n11) * wedge(fr.alpha_bar(1), fr.alpha_bar(2));
    CHECK((p02 - expect).max_abs_coeff() < 1e-12);
  }
}

TEST_CASE("alpha-basis substitution round trip") {
  Rng rng(110);
  StructureParams p = rng.random_params_real();
  Frame fr(p);
  for (int deg = 1; deg <= 4; ++deg) {
    CForm f = random_homogeneous(rng, deg, true);
    CHECK((fr.from_alpha_basis(fr.to_alpha_basis(f)) - f).max_abs_coeff() < 1e-10);
  }
}

TEST_CASE("form norms") {
  StructureParams p(1.7, 0.6, 1.1, 1, -1, 1);
  Frame fr(p);
  CHECK(form_norm(CForm(), p) == 0.0);
  CHECK(fr.norm(re(fr.alpha(0))) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fr.norm(fr.omega()) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(StructureParams(1, 1, 0, 1, 1, 1), InvalidParams);
  CHECK_THROWS_AS(StructureParams(1, 1, 1, 1, 0, 1), InvalidParams);
  CHECK_THROWS_AS(StructureParams(-1, 1, 1, 1, 1, 1), InvalidParams);
}
