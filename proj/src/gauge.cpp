#include "flagdt/gauge.hpp"

#include <cmath>

#include "flagdt/structure.hpp"

namespace flagdt {

namespace {

constexpr Complex kI{0.0, 1.0};

// [T_i, T_j] = 2 * sgn(i j k) * T_k
int bracket_coeff(int i, int j, int& k) {
  if (i == j) return 0;
  k = 3 - i - j;
  const bool even = (j == (i + 1) % 3);
  return even ? 2 : -2;
}

CForm eta_form(int slot) { return CForm::basis(static_cast<CoframeIndex>(2 + 2 * slot)); }
CForm theta_form(int slot) { return CForm::basis(static_cast<CoframeIndex>(3 + 2 * slot)); }

void require_eps_product_one(const StructureParams& p, double tol) {
  const double prod = p.eps[0] * p.eps[1] * p.eps[2];
  if (std::abs(prod - 1.0) > tol)
    throw PreconditionError(
        "Higgs-pair equations need eps1*eps2*eps3 = 1 (Omega basic on F2)");
}

void require_eps_all_one(const StructureParams& p, double tol) {
  if (!p.eps_all_one(tol))
    throw PreconditionError("raw DT equations need eps = (1,1,1) (Omega basic, half-flat family)");
}

} // namespace

LieValuedForm bracket_wedge(const LieValuedForm& a, const LieValuedForm& b) {
  LieValuedForm out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int k = 0;
      const int cf = bracket_coeff(i, j, k);
      if (cf == 0) continue;
      out.c[k] += Complex(static_cast<double>(cf), 0.0) * wedge(a.c[i], b.c[j]);
    }
  }
  return out;
}

LieValuedForm lie_d(const LieValuedForm& f) {
  return {{exterior_derivative(f.c[0]), exterior_derivative(f.c[1]), exterior_derivative(f.c[2])}};
}
LieValuedForm lie_star(const Frame& fr, const LieValuedForm& f) {
  return {{fr.star(f.c[0]), fr.star(f.c[1]), fr.star(f.c[2])}};
}
LieValuedForm lie_project(const Frame& fr, const LieValuedForm& f, int p, int q) {
  return {{fr.type_project(f.c[0], p, q), fr.type_project(f.c[1], p, q),
           fr.type_project(f.c[2], p, q)}};
}
LieValuedForm lie_conj(const LieValuedForm& f) {
  return {{conj(f.c[0]), conj(f.c[1]), conj(f.c[2])}};
}
double lie_norm(const Frame& fr, const LieValuedForm& f) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double n = fr.norm(f.c[i]);
    s += n * n;
  }
  return std::sqrt(s);
}

std::optional<int> root_slot(const Weight& w) {
  if (w.k == 1 && w.l == 2) return 0;
  if (w.k == -2 && w.l == -1) return 1;
  if (w.k == 1 && w.l == -1) return 2;
  return std::nullopt;
}

LieValuedForm connection_form(const InvariantConnection& conn, double gauge_phase) {
  LieValuedForm A;
  CForm beta = Complex(static_cast<double>(conn.weight.k), 0.0) * CForm::basis(CoframeIndex::Beta1) +
               Complex(static_cast<double>(conn.weight.l), 0.0) * CForm::basis(CoframeIndex::Beta2);
  A.c[0] = Complex(0.5, 0.0) * beta;
  if (conn.a != 0.0) {
    const int s = *root_slot(conn.weight);
    const double cc = conn.a * std::cos(2.0 * gauge_phase);
    const double ss = conn.a * std::sin(2.0 * gauge_phase);
    // Ad(exp(t T1)): T2 -> cos(2t) T2 + sin(2t) T3, T3 -> -sin(2t) T2 + cos(2t) T3.
    A.c[1] += Complex(cc, 0.0) * eta_form(s) + Complex(ss, 0.0) * theta_form(s);
    A.c[2] += Complex(ss, 0.0) * eta_form(s) - Complex(cc, 0.0) * theta_form(s);
  }
  return A;
}

LieValuedForm curvature_of(const LieValuedForm& A) {
  LieValuedForm F = lie_d(A) + Complex(0.5, 0.0) * bracket_wedge(A, A);
  if (!F.is_semibasic())
    throw ConsistencyError("curvature has vertical components: structure-table bug");
  return F;
}

LieValuedForm curvature(const InvariantConnection& conn) {
  return curvature_of(connection_form(conn));
}

LieValuedForm covariant_derivative_higgs(const InvariantConnection& conn, double phi) {
  if (!conn.weight.is_root())
    throw InvalidParams("covariant_derivative_higgs: weight must be a root");
  LieValuedForm Phi;
  Phi.c[0] = CForm::scalar(Complex(-phi, 0.0));
  return bracket_wedge(connection_form(conn), Phi);
}

namespace detail {

ResidualReport higgs_residual(const LieValuedForm& A, const HiggsPair& higgs,
                              const StructureParams& p) {
  Frame fr(p);
  const CForm omega = fr.omega();
  const CForm omega2_half = Complex(0.5, 0.0) * wedge(omega, omega);
  const CForm Omega1 = fr.Omega1();
  const CForm Omega2 = fr.Omega2();

  LieValuedForm F = curvature_of(A);

  LieValuedForm Phi1, Phi2;
  Phi1.c[0] = CForm::scalar(Complex(-higgs.phi1, 0.0));
  Phi2.c[0] = CForm::scalar(Complex(-higgs.phi2, 0.0));
  LieValuedForm dA_phi1 = bracket_wedge(A, Phi1);
  LieValuedForm dA_phi2 = bracket_wedge(A, Phi2);

  auto wedge_scalar_form = [](const LieValuedForm& f, const CForm& g) {
    return LieValuedForm{{wedge(f.c[0], g), wedge(f.c[1], g), wedge(f.c[2], g)}};
  };

  ResidualReport rep;

  LieValuedForm r32 = lie_star(fr, dA_phi1) - wedge_scalar_form(F, Omega1) +
                      wedge_scalar_form(dA_phi2, omega2_half);
  rep.eq32_norm = lie_norm(fr, r32);

  LieValuedForm comm = bracket_wedge(Phi1, Phi2);
  LieValuedForm r33 = wedge_scalar_form(F, omega2_half) - wedge_scalar_form(comm, fr.dvol());
  rep.eq33_norm = lie_norm(fr, r33);

  LieValuedForm r34 = lie_star(fr, dA_phi2) - wedge_scalar_form(F, Omega2) -
                      wedge_scalar_form(dA_phi1, omega2_half);
  rep.eq34_norm = lie_norm(fr, r34);

  LieValuedForm bianchi = lie_d(F) + bracket_wedge(A, F);
  rep.bianchi_norm = lie_norm(fr, bianchi);
  if (rep.bianchi_norm > 1e-8)
    throw ConsistencyError("Bianchi identity violated");
  return rep;
}

ResidualReport phym_residual_form(const LieValuedForm& A, const StructureParams& p) {
  Frame fr(p);
  LieValuedForm F = curvature_of(A);
  ResidualReport rep;
  rep.f02_norm = lie_norm(fr, lie_project(fr, F, 0, 2));
  const CForm omega2_half = Complex(0.5, 0.0) * wedge(fr.omega(), fr.omega());
  LieValuedForm lam{{fr.star(wedge(F.c[0], omega2_half)), fr.star(wedge(F.c[1], omega2_half)),
                     fr.star(wedge(F.c[2], omega2_half))}};
  rep.lambdaF_norm = lie_norm(fr, lam);
  LieValuedForm bianchi = lie_d(F) + bracket_wedge(A, F);
  rep.bianchi_norm = lie_norm(fr, bianchi);
  return rep;
}

ResidualReport u_residual_form(const LieValuedForm& A, const HiggsPair& higgs,
                               const StructureParams& p) {
  Frame fr(p);
  LieValuedForm F = curvature_of(A);

  // u = (i/4)(Phi1 + i Phi2) conj(Omega), Phi_i = -phi_i T1.
  const Complex phi(higgs.phi1, higgs.phi2);
  LieValuedForm u;
  u.c[0] = (-kI * phi * 0.25) * conj(fr.Omega());

  auto lie_wedge_right = [](const LieValuedForm& f, const CForm& g) {
    return LieValuedForm{{wedge(f.c[0], g), wedge(f.c[1], g), wedge(f.c[2], g)}};
  };

  ResidualReport rep;

  // dbar*_A u = -*(dA(*u))^{1,3}
  LieValuedForm su = lie_star(fr, u);
  LieValuedForm dsu = lie_d(su) + bracket_wedge(A, su);
  LieValuedForm p13 = lie_project(fr, dsu, 1, 3);
  LieValuedForm dbar_star_u = -lie_star(fr, p13);
  LieValuedForm r24 = lie_project(fr, F, 0, 2) - dbar_star_u;
  rep.raw24_norm = lie_norm(fr, r24);

  // Lambda F = *(F ^ omega^2/2); *[u ^ conj(u)].
  const CForm omega2_half = Complex(0.5, 0.0) * wedge(fr.omega(), fr.omega());
  LieValuedForm lamF = lie_star(fr, lie_wedge_right(F, omega2_half));
  LieValuedForm uubar = bracket_wedge(u, lie_conj(u));
  LieValuedForm r25 = lamF - lie_star(fr, uubar);
  rep.raw25_norm = lie_norm(fr, r25);
  return rep;
}

} // namespace detail

ResidualReport dt_residual(const InvariantConnection& conn, const HiggsPair& higgs,
                           const StructureParams& p, double tol) {
  p.validate();
  require_eps_product_one(p, tol);
  return detail::higgs_residual(connection_form(conn), higgs, p);
}

ResidualReport phym_residual(const InvariantConnection& conn, const StructureParams& p) {
  p.validate();
  return detail::phym_residual_form(connection_form(conn), p);
}

ResidualReport u_residual(const InvariantConnection& conn, const HiggsPair& higgs,
                          const StructureParams& p, double tol) {
  p.validate();
  require_eps_all_one(p, tol);
  return detail::u_residual_form(connection_form(conn), higgs, p);
}

InvariantConnection GaugeOrbitPoint::fold(double tol) const {
  if (!on_real_slice(tol))
    throw PreconditionError("gauge orbit point is off the real slice; fold only at t = k*pi/2");
  return InvariantConnection(weight, a_par);
}

GaugeOrbitPoint gauge_rotate(const InvariantConnection& conn, const HiggsPair& higgs, double t) {
  if (!conn.weight.is_root())
    throw InvalidParams("gauge_rotate: weight must be a root");
  GaugeOrbitPoint pt;
  pt.weight = conn.weight;
  const double snap = 1e-15 * std::max(1.0, std::abs(conn.a));
  pt.a_par = conn.a * std::cos(2.0 * t);
  pt.a_perp = conn.a * std::sin(2.0 * t);
  if (std::abs(pt.a_perp) < snap) pt.a_perp = 0.0;
  if (std::abs(pt.a_par) < snap) pt.a_par = 0.0;
  pt.higgs = higgs;
  return pt;
}

LieValuedForm connection_form(const GaugeOrbitPoint& pt) {
  LieValuedForm A;
  CForm beta = Complex(static_cast<double>(pt.weight.k), 0.0) * CForm::basis(CoframeIndex::Beta1) +
               Complex(static_cast<double>(pt.weight.l), 0.0) * CForm::basis(CoframeIndex::Beta2);
  A.c[0] = Complex(0.5, 0.0) * beta;
  const int s = *root_slot(pt.weight);
  A.c[1] += Complex(pt.a_par, 0.0) * eta_form(s) + Complex(pt.a_perp, 0.0) * theta_form(s);
  A.c[2] += Complex(pt.a_perp, 0.0) * eta_form(s) - Complex(pt.a_par, 0.0) * theta_form(s);
  return A;
}

ResidualReport dt_residual(const GaugeOrbitPoint& pt, const StructureParams& p, double tol) {
  p.validate();
  require_eps_product_one(p, tol);
  return detail::higgs_residual(connection_form(pt), pt.higgs, p);
}

} // namespace flagdt
