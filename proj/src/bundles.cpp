#include "flagdt/bundles.hpp"

#include <cmath>
#include <sstream>

#include "flagdt/ratlin.hpp"
#include "flagdt/structure.hpp"

namespace flagdt {

namespace {

Mono pair_mono(int i) {
  return static_cast<Mono>((Mono(1) << (2 + 2 * i)) | (Mono(1) << (3 + 2 * i)));
}

// Unit-scale Re/Im of (e1 + i t1)^(e2 + i t2)^(e3 + i t3): a basis of the
// T^2-basic invariant 3-forms, the forms that descend to F2.
QForm basic3_re() {
  QForm f;
  f.add(0b01010100, Rational(1));
  f.add(0b10100100, Rational(-1));
  f.add(0b10011000, Rational(-1));
  f.add(0b01101000, Rational(-1));
  return f;
}
QForm basic3_im() {
  QForm f;
  f.add(0b01011000, Rational(1));
  f.add(0b01100100, Rational(1));
  f.add(0b10010100, Rational(1));
  f.add(0b10101000, Rational(-1));
  return f;
}

bool supported_on_pairs2(const QForm& f) {
  for (const auto& [m, c] : f.terms())
    if (m != pair_mono(0) && m != pair_mono(1) && m != pair_mono(2)) return false;
  return true;
}

Mono pair4(int i, int j) { return static_cast<Mono>(pair_mono(i) | pair_mono(j)); }

bool supported_on_pairs4(const QForm& f) {
  for (const auto& [m, c] : f.terms())
    if (m != pair4(0, 1) && m != pair4(0, 2) && m != pair4(1, 2)) return false;
  return true;
}

} // namespace

QForm d_beta_exact(const Weight& w) {
  const auto& t = StructureTable::instance();
  return Rational(w.k) * t.d_exact(0) + Rational(w.l) * t.d_exact(1);
}

CForm d_beta(const Weight& w) { return to_complex_form(d_beta_exact(w)); }

std::pair<double, double> slope_routes(const Weight& w, const StructureParams& p) {
  const double k = static_cast<double>(w.k);
  const double l = static_cast<double>(w.l);
  const double closed = (2.0 / 3.0) * (-l / (p.eps[0] * p.A[0] * p.A[0]) +
                                       k / (p.eps[1] * p.A[1] * p.A[1]) -
                                       (k - l) / (p.eps[2] * p.A[2] * p.A[2]));

  Frame frame(p);
  CForm omega = frame.omega();
  CForm omega2 = wedge(omega, omega);
  CForm top_num = wedge(d_beta(w), omega2);
  CForm top_den = wedge(omega, omega2);
  const Complex num = top_num.coeff(kTopMono);
  const Complex den = top_den.coeff(kTopMono);
  const double ratio = -(num / den).real();
  return {closed, ratio};
}

double slope(const Weight& w, const StructureParams& p, double tol) {
  p.validate();
  auto [closed, ratio] = slope_routes(w, p);
  const double scale = std::max(1.0, std::abs(closed));
  if (std::abs(closed - ratio) > tol * scale) {
    std::ostringstream os;
    os << "slope route mismatch for weight (" << w.k << "," << w.l << "): " << closed
       << " vs " << ratio;
    throw ConsistencyError(os.str());
  }
  return closed;
}

LineConnectionReport phym_line_connection(const Weight& w, const StructureParams& p,
                                          double tol) {
  p.validate();
  Frame frame(p);
  LineConnectionReport r;

  CForm db = d_beta(w);
  CForm f02 = frame.type_project(db, 0, 2);
  r.is_pseudo_holomorphic = frame.norm(f02) <= tol * std::max(1.0, frame.norm(db));

  const double lhs =
      w.k * p.eps[0] * p.A[0] * p.A[0] * (p.A[1] * p.A[1] * p.eps[1] - p.A[2] * p.A[2] * p.eps[2]);
  const double rhs =
      w.l * p.eps[1] * p.A[1] * p.A[1] * (p.A[0] * p.A[0] * p.eps[0] - p.A[2] * p.A[2] * p.eps[2]);
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  const bool closed_form = std::abs(lhs - rhs) <= tol * scale;

  CForm fw = wedge(db, wedge(frame.omega(), frame.omega()));
  const bool direct = std::abs(fw.coeff(kTopMono)) <=
                      tol * std::max(1.0, std::abs(wedge(frame.omega(), wedge(frame.omega(), frame.omega())).coeff(kTopMono)));
  if (closed_form != direct)
    throw ConsistencyError("degree-0 pHYM criterion disagrees with d(beta)^omega^2 = 0");
  r.is_degree0_phym = closed_form;
  return r;
}

CohomologyClass4 h4_reduce(const Rational& p, const Rational& q, const Rational& m) {
  return CohomologyClass4{p - m, q - m};
}

std::optional<CohomologyClass2> h2_class_of(const QForm& closed2) {
  if (!supported_on_pairs2(closed2)) return std::nullopt;
  const Rational c1 = closed2.coeff(pair_mono(0));
  const Rational c2 = closed2.coeff(pair_mono(1));
  const Rational c3 = closed2.coeff(pair_mono(2));
  if (c1 + c2 + c3 != 0) return std::nullopt;  // not closed
  // X = x*d(beta1) + y*d(beta2) with d(beta1) = -2 P2 + 2 P3, d(beta2) = 2 P1 - 2 P3.
  return CohomologyClass2{-c2 / 2, c1 / 2};
}

std::optional<CohomologyClass4> h4_class_of(const QForm& closed4) {
  if (!supported_on_pairs4(closed4)) return std::nullopt;
  const Rational t12 = closed4.coeff(pair4(0, 1));
  const Rational t13 = closed4.coeff(pair4(0, 2));
  const Rational t23 = closed4.coeff(pair4(1, 2));
  // X = p*dβ1^2 + q*dβ2^2 + y*d(psi_im) with dβ1^2 = -8 P23, dβ2^2 = -8 P13,
  // d(psi_im) = -4(P12 + P13 + P23).
  const Rational y = t12 / -4;
  const Rational q = (t13 - (-4) * y) / -8;
  const Rational p = (t23 - (-4) * y) / -8;
  return CohomologyClass4{p, q};
}

std::optional<QForm> solve_primitive(const QForm& target4) {
  const QForm b0 = basic3_re();
  const QForm b1 = basic3_im();
  const QForm db0 = exterior_derivative(b0);
  const QForm db1 = exterior_derivative(b1);

  // Row space: every 4-form monomial appearing anywhere.
  std::map<Mono, std::size_t> rows;
  auto collect = [&rows](const QForm& f) {
    for (const auto& [m, c] : f.terms()) rows.try_emplace(m, rows.size());
  };
  collect(db0);
  collect(db1);
  collect(target4);

  std::vector<std::vector<Rational>> M(rows.size(), std::vector<Rational>(2, Rational(0)));
  std::vector<Rational> rhs(rows.size(), Rational(0));
  for (const auto& [m, r] : rows) {
    M[r][0] = db0.coeff(m);
    M[r][1] = db1.coeff(m);
    rhs[r] = target4.coeff(m);
  }
  auto x = solve_exact(std::move(M), std::move(rhs));
  if (!x) return std::nullopt;
  return (*x)[0] * b0 + (*x)[1] * b1;
}

H4Certificate verify_h4_relation() {
  const auto& t = StructureTable::instance();
  const QForm db1 = t.d_exact(0);
  const QForm db2 = t.d_exact(1);
  H4Certificate cert;
  cert.target = wedge(db1, db1) + wedge(db2, db2) + wedge(db1, db2);
  auto psi = solve_primitive(cert.target);
  if (!psi)
    throw ConsistencyError("no basic primitive for dβ1^2 + dβ2^2 + dβ1^dβ2: structure-table bug");
  cert.psi = *psi;
  cert.residual_zero = (exterior_derivative(cert.psi) - cert.target).is_zero();
  if (!cert.residual_zero)
    throw ConsistencyError("h4 primitive residual nonzero");
  return cert;
}

CharClassReport char_classes(const Weight& w) {
  CharClassReport rep;
  rep.weight = w;

  const QForm db = d_beta_exact(w);

  // Curvature of the standard invariant connection beta (x) diag(i,0) on
  // E_beta; u = i F has entries diag(-d(beta), 0).
  std::array<std::array<GForm, 2>, 2> u;
  u[0][0] = to_gauss_form(-db);

  GForm tr_u = u[0][0] + u[1][1];
  auto cls1 = h2_class_of(real_part(tr_u));
  if (!cls1 || !imag_part(tr_u).is_zero())
    throw ConsistencyError("c1 Chern-Weil form not in the invariant model");
  rep.c1 = *cls1;

  GForm tr_uu;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) tr_uu += wedge(u[i][j], u[j][i]);
  GForm c2_form = GaussRational(Rational(1, 2)) * (wedge(tr_u, tr_u) - tr_uu);
  if (!imag_part(c2_form).is_zero())
    throw ConsistencyError("c2 Chern-Weil form has an imaginary part");
  auto cls2 = h4_class_of(real_part(c2_form));
  if (!cls2) throw ConsistencyError("c2 Chern-Weil form not in the invariant model");
  rep.c2 = *cls2;

  auto mod2 = [](const Rational& r) {
    if (boost::multiprecision::denominator(r) != 1)
      throw ConsistencyError("w2 of a non-integral class");
    long v = boost::multiprecision::numerator(r).convert_to<long>();
    return static_cast<int>(((v % 2) + 2) % 2);
  };
  rep.w2 = {mod2(rep.c1.x), mod2(rep.c1.y)};

  auto c1sq = h4_class_of(wedge(db, db));
  if (!c1sq) throw ConsistencyError("c1^2 not in the invariant model");
  rep.p1 = CohomologyClass4{c1sq->p - 4 * rep.c2.p, c1sq->q - 4 * rep.c2.q};
  return rep;
}

} // namespace flagdt
