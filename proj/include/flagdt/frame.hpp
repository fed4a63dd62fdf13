#ifndef FLAGDT_FRAME_HPP
#define FLAGDT_FRAME_HPP

#include <array>

#include "flagdt/form.hpp"
#include "flagdt/params.hpp"
#include "flagdt/structure.hpp"

namespace flagdt {

/// Metric/complex geometry attached to a parameter choice: the complex
/// coframe alpha_i = A_i(eta_i + i eps_i theta_i), the oriented orthonormal
/// coframe e^{2i-1} = Re(alpha_i), e^{2i} = Im(alpha_i), Hodge star with
/// dvol = e^1^...^e^6 = omega^3/3!, (p,q) type projection and coefficient
/// norms. All operations require semibasic input.
class Frame {
public:
  explicit Frame(const StructureParams& p);

  const StructureParams& params() const { return params_; }

  CForm alpha(int i) const;      // i in {0,1,2}
  CForm alpha_bar(int i) const;
  CForm omega() const { return omega_; }
  CForm Omega() const { return Omega_; }   // alpha1 ^ alpha2 ^ alpha3
  CForm Omega1() const;
  CForm Omega2() const;
  CForm dvol() const { return dvol_; }

  CForm star(const CForm& f) const;
  CForm type_project(const CForm& f, int p, int q) const;
  double norm(const CForm& f) const;

  /// Change of basis: slot(eta_i) carries alpha_i, slot(theta_i) carries
  /// alpha_bar_i. Round trip is the identity.
  CForm to_alpha_basis(const CForm& f) const;
  CForm from_alpha_basis(const CForm& f) const;

private:
  void require_semibasic(const CForm& f, const char* op) const;

  StructureParams params_;
  std::array<double, 6> scale_;  // e_b = scale_b * (eta/theta)_b
  CForm omega_, Omega_, dvol_;
  std::array<CForm, 8> to_alpha_images_;
  std::array<CForm, 8> from_alpha_images_;
};

/// Euclidean coefficient norm in the orthonormal coframe expansion.
double form_norm(const CForm& f, const StructureParams& p);

} // namespace flagdt

#endif
