#ifndef FLAGDT_BUNDLES_HPP
#define FLAGDT_BUNDLES_HPP

#include <map>
#include <optional>
#include <utility>

#include "flagdt/flaggeom.hpp"
#include "flagdt/form.hpp"
#include "flagdt/params.hpp"

namespace flagdt {

/// Integral weight beta = k*beta1 + l*beta2, classifying the homogeneous
/// U(1)-bundle L_beta (and the SO(3)-bundle P_beta).
struct Weight {
  long k = 0;
  long l = 0;

  /// Roots carrying non-canonical invariant SO(3)-connections; negatives
  /// are reached through the Weyl action, not stored separately.
  bool is_root() const {
    return (k == 1 && l == 2) || (k == -2 && l == -1) || (k == 1 && l == -1);
  }
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// d(beta) as an exact 2-form from the structure table.
QForm d_beta_exact(const Weight& w);
CForm d_beta(const Weight& w);

/// Slope of L_beta, computed two ways and asserted equal:
/// (a) the closed form (2/3)(-l/(e1 A1^2) + k/(e2 A2^2) - (k-l)/(e3 A3^2)),
/// (b) minus the top-form coefficient ratio (d(beta)^omega^2) / omega^3.
double slope(const Weight& w, const StructureParams& p, double tol = kDefaultTol);

/// Both routes, exposed for the verification suite.
std::pair<double, double> slope_routes(const Weight& w, const StructureParams& p);

struct LineConnectionReport {
  bool is_pseudo_holomorphic = false;
  bool is_degree0_phym = false;
};

/// The canonical connection i*beta on L_beta: always pseudo-holomorphic;
/// pHYM of degree 0 iff the slope vanishes. The closed-form criterion is
/// cross-checked against d(beta)^omega^2 = 0 computed directly.
LineConnectionReport phym_line_connection(const Weight& w, const StructureParams& p,
                                          double tol = 1e-8);

/// H^2(F2) in the basis {[d beta1], [d beta2]}; exact coordinates.
struct CohomologyClass2 {
  Rational x{0}, y{0};
  friend bool operator==(const CohomologyClass2&, const CohomologyClass2&) = default;
};

/// H^4(F2) in the basis {[d beta1]^2, [d beta2]^2}, cross terms eliminated
/// through [d beta1][d beta2] = -[d beta1]^2 - [d beta2]^2.
struct CohomologyClass4 {
  Rational p{0}, q{0};
  friend bool operator==(const CohomologyClass4&, const CohomologyClass4&) = default;
};

CohomologyClass4 h4_reduce(const Rational& p, const Rational& q, const Rational& m);

/// Class of a closed invariant 2-form / 4-form in the invariant cohomology
/// model (exact solve modulo exact invariant forms).
std::optional<CohomologyClass2> h2_class_of(const QForm& closed2);
std::optional<CohomologyClass4> h4_class_of(const QForm& closed4);

/// Exact primitive psi with d(psi) = dβ1^dβ1 + dβ2^dβ2 + dβ1^dβ2, returned
/// with its residual re-checked; failure signals a structure-table bug.
struct H4Certificate {
  QForm psi;
  QForm target;
  bool residual_zero = false;
};
H4Certificate verify_h4_relation();

/// Generic exact-primitive solver over the invariant 3-forms (also used to
/// probe infeasible targets).
std::optional<QForm> solve_primitive(const QForm& target4);

/// c1, c2, w2, p1 of E_beta / V_beta from the standard invariant connection
/// beta (x) diag(i, 0), via Chern-Weil traces reduced in the cohomology
/// model. Coordinates carry symbolic units: 1/(2 pi) in H^2, 1/(4 pi^2)
/// in H^4. The curvature of this split connection has vanishing second
/// Chern form, so c2 = 0 and p1 = c1^2.
struct CharClassReport {
  Weight weight;
  CohomologyClass2 c1;
  CohomologyClass4 c2;
  std::array<int, 2> w2{0, 0};
  CohomologyClass4 p1;
};
CharClassReport char_classes(const Weight& w);

} // namespace flagdt

#endif
