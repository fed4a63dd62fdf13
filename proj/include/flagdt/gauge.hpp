#ifndef FLAGDT_GAUGE_HPP
#define FLAGDT_GAUGE_HPP

#include <array>
#include <optional>

#include "flagdt/bundles.hpp"
#include "flagdt/frame.hpp"

namespace flagdt {

/// so(3)-valued invariant form: components along the basis T1, T2, T3 with
/// bracket table [T1,T2] = 2 T3, [T2,T3] = 2 T1, [T3,T1] = 2 T2. The
/// normalization is pinned by the curvature components of the invariant
/// connections (see the verification suite).
struct LieValuedForm {
  std::array<CForm, 3> c;

  LieValuedForm operator-() const { return {{-c[0], -c[1], -c[2]}}; }
  LieValuedForm& operator+=(const LieValuedForm& o) {
    for (int i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
  }
  LieValuedForm& operator-=(const LieValuedForm& o) {
    for (int i = 0; i < 3; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend LieValuedForm operator+(LieValuedForm a, const LieValuedForm& b) { return a += b; }
  friend LieValuedForm operator-(LieValuedForm a, const LieValuedForm& b) { return a -= b; }
  friend LieValuedForm operator*(const Complex& s, const LieValuedForm& f) {
    return {{s * f.c[0], s * f.c[1], s * f.c[2]}};
  }
  bool is_semibasic() const {
    return c[0].is_semibasic() && c[1].is_semibasic() && c[2].is_semibasic();
  }
};

/// [A ^ B]: wedge on form parts, bracket on Lie parts.
LieValuedForm bracket_wedge(const LieValuedForm& a, const LieValuedForm& b);

LieValuedForm lie_d(const LieValuedForm& f);
LieValuedForm lie_star(const Frame& fr, const LieValuedForm& f);
LieValuedForm lie_project(const Frame& fr, const LieValuedForm& f, int p, int q);
LieValuedForm lie_conj(const LieValuedForm& f);
double lie_norm(const Frame& fr, const LieValuedForm& f);

/// Higgs pair (phi1, phi2) with Phi_i = -phi_i T1.
struct HiggsPair {
  double phi1 = 0.0;
  double phi2 = 0.0;
};

/// Wang-theorem invariant connection on P_beta: the canonical part
/// beta (x) T1/2 plus, when beta is a root, the off-diagonal amplitude a
/// along (eta_i (x) T2 - theta_i (x) T3). Non-root weights admit only the
/// canonical connection, so a is forced to zero there.
struct InvariantConnection {
  Weight weight;
  double a = 0.0;

  InvariantConnection(Weight w, double amp) : weight(w), a(amp) {
    if (!w.is_root() && a != 0.0)
      throw InvalidParams("only root weights admit a non-canonical invariant connection");
  }
  bool irreducible() const { return a != 0.0; }
};

/// Root slot (0,1,2) of a weight, if it is one of r1, r2, r3.
std::optional<int> root_slot(const Weight& w);

/// The connection as a Lie-valued 1-form, optionally rotated through the
/// constant gauge exp(t T1): the (T2,T3)-plane turns by angle 2t.
LieValuedForm connection_form(const InvariantConnection& conn, double gauge_phase = 0.0);

/// F = dA + (1/2)[A ^ A]; asserted semibasic.
LieValuedForm curvature(const InvariantConnection& conn);
LieValuedForm curvature_of(const LieValuedForm& A);

/// d_A Phi for Phi = -phi T1 (constant, so d_A Phi = [A, Phi]).
LieValuedForm covariant_derivative_higgs(const InvariantConnection& conn, double phi);

/// Residual norms; an equation holds when its norm is below tolerance.
struct ResidualReport {
  std::optional<double> eq32_norm;
  std::optional<double> eq33_norm;
  std::optional<double> eq34_norm;
  std::optional<double> f02_norm;
  std::optional<double> lambdaF_norm;
  std::optional<double> raw24_norm;
  std::optional<double> raw25_norm;
  double bianchi_norm = 0.0;

  double max_filled() const {
    double v = 0.0;
    for (auto o : {eq32_norm, eq33_norm, eq34_norm, f02_norm, lambdaF_norm, raw24_norm, raw25_norm})
      if (o) v = std::max(v, *o);
    return v;
  }
};

/// Higgs-pair equations: fills eq32, eq33, eq34 plus an internal Bianchi
/// check. Requires eps1*eps2*eps3 = 1 (Omega basic) like the equations'
/// derivation; the solver re-verifies through the ungated evaluator below.
ResidualReport dt_residual(const InvariantConnection& conn, const HiggsPair& higgs,
                           const StructureParams& p, double tol = kDefaultTol);

/// f02 and lambdaF norms of the connection alone.
ResidualReport phym_residual(const InvariantConnection& conn, const StructureParams& p);

/// Raw equations on (A, u) with u = (i/4)(Phi1 + i Phi2) conj(Omega); fills
/// raw24 and raw25. Requires eps = (1,1,1).
ResidualReport u_residual(const InvariantConnection& conn, const HiggsPair& higgs,
                          const StructureParams& p, double tol = kDefaultTol);

namespace detail {
/// Same as dt_residual / phym_residual / u_residual but taking an assembled
/// connection form (rotated orbit points, real-eps generality).
ResidualReport higgs_residual(const LieValuedForm& A, const HiggsPair& higgs,
                              const StructureParams& p);
ResidualReport phym_residual_form(const LieValuedForm& A, const StructureParams& p);
ResidualReport u_residual_form(const LieValuedForm& A, const HiggsPair& higgs,
                               const StructureParams& p);
} // namespace detail

/// Point on the exp(t T1) gauge orbit of (conn, higgs): the amplitude
/// splits into the real-slice component a_par and the orthogonal component
/// a_perp = a sin(2t). The Higgs pair commutes with T1 and is fixed.
struct GaugeOrbitPoint {
  Weight weight;
  double a_par = 0.0;
  double a_perp = 0.0;
  HiggsPair higgs;

  bool on_real_slice(double tol = kDefaultTol) const { return std::abs(a_perp) <= tol; }
  /// Folds back to an InvariantConnection; only valid on the real slice
  /// (t a multiple of pi/2).
  InvariantConnection fold(double tol = kDefaultTol) const;
};

GaugeOrbitPoint gauge_rotate(const InvariantConnection& conn, const HiggsPair& higgs, double t);
LieValuedForm connection_form(const GaugeOrbitPoint& pt);
ResidualReport dt_residual(const GaugeOrbitPoint& pt, const StructureParams& p,
                           double tol = kDefaultTol);

} // namespace flagdt

#endif
