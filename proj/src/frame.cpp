#include "flagdt/frame.hpp"

#include <cmath>

namespace flagdt {

namespace {

constexpr Complex kI{0.0, 1.0};

int eta_slot(int i) { return 2 + 2 * i; }
int theta_slot(int i) { return 3 + 2 * i; }

/// Sign of the permutation (m, complement) of the six base slots.
int complement_sign(Mono m) {
  int inversions = 0;
  Mono mc = static_cast<Mono>(~m & kSemibasicMask);
  for (int i = 2; i < 8; ++i) {
    if (!(m & (Mono(1) << i))) continue;
    for (int j = 2; j < i; ++j)
      if (mc & (Mono(1) << j)) ++inversions;
  }
  return (inversions & 1) ? -1 : 1;
}

} // namespace

Frame::Frame(const StructureParams& p) : params_(p) {
  params_.validate();
  for (int i = 0; i < 3; ++i) {
    scale_[2 * i] = params_.A[i];                  // Re(alpha_i) = A_i eta_i
    scale_[2 * i + 1] = params_.eps[i] * params_.A[i];  // Im(alpha_i) = eps_i A_i theta_i
  }

  omega_ = CForm();
  for (int i = 0; i < 3; ++i) {
    Mono m = static_cast<Mono>((Mono(1) << eta_slot(i)) | (Mono(1) << theta_slot(i)));
    omega_.add(m, Complex(params_.eps[i] * params_.A[i] * params_.A[i], 0.0));
  }

  for (int i = 0; i < 8; ++i) {
    to_alpha_images_[i] = CForm::basis(static_cast<CoframeIndex>(i));
    from_alpha_images_[i] = CForm::basis(static_cast<CoframeIndex>(i));
  }
  for (int i = 0; i < 3; ++i) {
    const double Ai = params_.A[i];
    const double ei = params_.eps[i];
    CForm a = CForm::basis(static_cast<CoframeIndex>(eta_slot(i)));
    CForm ab = CForm::basis(static_cast<CoframeIndex>(theta_slot(i)));
    // eta = (alpha + abar)/(2A), theta = (alpha - abar)/(2 i eps A)
    to_alpha_images_[eta_slot(i)] = Complex(1.0 / (2.0 * Ai), 0.0) * (a + ab);
    to_alpha_images_[theta_slot(i)] = (Complex(1.0, 0.0) / (2.0 * kI * ei * Ai)) * (a - ab);
    CForm eta = CForm::basis(static_cast<CoframeIndex>(eta_slot(i)));
    CForm theta = CForm::basis(static_cast<CoframeIndex>(theta_slot(i)));
    from_alpha_images_[eta_slot(i)] = Complex(Ai, 0.0) * eta + Complex(0.0, Ai * ei) * theta;
    from_alpha_images_[theta_slot(i)] = Complex(Ai, 0.0) * eta - Complex(0.0, Ai * ei) * theta;
  }

  Omega_ = wedge(wedge(alpha(0), alpha(1)), alpha(2));

  double vol = 1.0;
  for (int i = 0; i < 3; ++i) vol *= params_.eps[i] * params_.A[i] * params_.A[i];
  dvol_ = CForm::monomial(kTopMono, Complex(vol, 0.0));
}

CForm Frame::alpha(int i) const {
  const double Ai = params_.A[i];
  CForm f = Complex(Ai, 0.0) * CForm::basis(static_cast<CoframeIndex>(eta_slot(i)));
  f += Complex(0.0, Ai * params_.eps[i]) * CForm::basis(static_cast<CoframeIndex>(theta_slot(i)));
  return f;
}

CForm Frame::alpha_bar(int i) const { return conj(alpha(i)); }

CForm Frame::Omega1() const {
  CForm o = Omega_;
  return Complex(0.5, 0.0) * (o + conj(o));
}

CForm Frame::Omega2() const {
  CForm o = Omega_;
  return (Complex(1.0, 0.0) / (2.0 * kI)) * (o - conj(o));
}

void Frame::require_semibasic(const CForm& f, const char* op) const {
  if (!f.is_semibasic())
    throw NonSemibasic(std::string(op) + ": form has vertical (beta) factors");
}

CForm Frame::star(const CForm& f) const {
  require_semibasic(f, "hodge_star");
  CForm out;
  for (const auto& [m, c] : f.terms()) {
    double factor = 1.0;
    for (int b = 2; b < 8; ++b) {
      if (m & (Mono(1) << b)) factor /= scale_[b - 2];
    }
    Mono mc = static_cast<Mono>(~m & kSemibasicMask);
    for (int b = 2; b < 8; ++b) {
      if (mc & (Mono(1) << b)) factor *= scale_[b - 2];
    }
    factor *= complement_sign(m);
    out.add(mc, c * factor);
  }
  return out;
}

CForm Frame::to_alpha_basis(const CForm& f) const { return substitute(f, to_alpha_images_); }
CForm Frame::from_alpha_basis(const CForm& f) const { return substitute(f, from_alpha_images_); }

CForm Frame::type_project(const CForm& f, int p, int q) const {
  require_semibasic(f, "type_project");
  CForm g = to_alpha_basis(f.degree_part(p + q));
  CForm kept;
  for (const auto& [m, c] : g.terms()) {
    int np = 0, nq = 0;
    for (int i = 0; i < 3; ++i) {
      if (m & (Mono(1) << eta_slot(i))) ++np;
      if (m & (Mono(1) << theta_slot(i))) ++nq;
    }
    if (np == p && nq == q) kept.add(m, c);
  }
  return from_alpha_basis(kept);
}

double Frame::norm(const CForm& f) const {
  require_semibasic(f, "form_norm");
  double s2 = 0.0;
  for (const auto& [m, c] : f.terms()) {
    double factor = 1.0;
    for (int b = 2; b < 8; ++b)
      if (m & (Mono(1) << b)) factor /= scale_[b - 2];
    s2 += std::norm(c * factor);
  }
  return std::sqrt(s2);
}

double form_norm(const CForm& f, const StructureParams& p) { return Frame(p).norm(f); }

} // namespace flagdt
