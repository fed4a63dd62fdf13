#ifndef FLAGDT_FLAGGEOM_HPP
#define FLAGDT_FLAGGEOM_HPP

#include <array>

#include "flagdt/frame.hpp"

namespace flagdt {

/// omega, Omega = Omega1 + i Omega2 and the volume form for a parameter
/// choice, together with the frame geometry they live in.
struct InvariantStructure {
  StructureParams params;
  Frame frame;
  CForm omega;
  CForm Omega1;
  CForm Omega2;
  CForm dvol;
  std::array<CForm, 3> alpha;

  explicit InvariantStructure(const StructureParams& p);
};

InvariantStructure build_structure(const StructureParams& p);

struct ClassificationFlags {
  bool integrable = false;
  bool symplectic = false;
  bool kahler = false;
  bool half_flat = false;
  bool nearly_kahler_up_to_scale = false;
  bool kahler_einstein = false;
};

/// Diagonal Nijenhuis entries, computed two ways and asserted equal:
/// (a) closed form n_i = A_i (e1 e2 e3 + e1 + e2 + e3) / (4 e_j e_k A_j A_k),
/// (b) i * coefficient of abar_j ^ abar_k (cyclic order) in the (0,2) part
///     of d(alpha_i).
/// On the eps = +-1 lattice (a) coincides with the usual closed form; for
/// real eps route (b) is the defining one and (a) is its rational expression.
std::array<double, 3> nijenhuis(const StructureParams& p, double tol = kDefaultTol);

struct DOmegaDecomposition {
  CForm d_omega;   // from the structure table
  CForm gamma;     // assembled 3-form with d_omega = Re(gamma)
};

/// Computes d(omega) directly and the complex 3-form gamma whose real part
/// it equals; the relation is asserted (calibrated once against
/// d(omega) = 3 Omega1 at A=(1,1,1), eps=(1,1,1)).
DOmegaDecomposition d_omega_decompose(const InvariantStructure& s, double tol = kDefaultTol);

/// Flags use a classification tolerance, coarser by default than the
/// residual tolerance: the defining conditions are polynomial in the
/// parameters, and inputs often carry few decimal digits.
ClassificationFlags classify(const StructureParams& p, double tol = 1e-8);

/// Exact-rational classification for rational parameter literals.
ClassificationFlags classify_exact(const RationalParams& p);

/// Weyl group action on parameters (permutation with eps sign flips).
/// sigma cyclically rotates the three root slots; p1, p2, p3 are the
/// reflections fixing one slot.
enum class WeylElement { Identity, Sigma, SigmaSq, P1, P2, P3 };

StructureParams weyl_params(WeylElement w, const StructureParams& p);
RationalParams weyl_params(WeylElement w, const RationalParams& p);

} // namespace flagdt

#endif
