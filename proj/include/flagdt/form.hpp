#ifndef FLAGDT_FORM_HPP
#define FLAGDT_FORM_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "flagdt/errors.hpp"
#include "flagdt/scalar.hpp"

namespace flagdt {

/// The fixed left-invariant coframe of SU(3). The order is frozen: it fixes
/// monomial keys, wedge signs and every convention downstream.
enum class CoframeIndex : std::uint8_t {
  Beta1 = 0,
  Beta2 = 1,
  Eta1 = 2,
  Theta1 = 3,
  Eta2 = 4,
  Theta2 = 5,
  Eta3 = 6,
  Theta3 = 7,
};

inline const char* coframe_name(CoframeIndex i) {
  static const char* names[8] = {"b1", "b2", "e1", "t1", "e2", "t2", "e3", "t3"};
  return names[static_cast<int>(i)];
}

/// A monomial is a subset of the 8 coframe slots, encoded as a bitmask.
/// The represented wedge monomial lists the slots in increasing order.
using Mono = std::uint8_t;

inline constexpr Mono kVerticalMask = 0x03;          // beta1, beta2
inline constexpr Mono kSemibasicMask = 0xFC;         // eta/theta slots
inline constexpr Mono kTopMono = 0xFC;               // e1 t1 e2 t2 e3 t3

inline int mono_degree(Mono m) { return std::popcount(static_cast<unsigned>(m)); }

/// Sign of e_A ^ e_B relative to e_{A u B} for disjoint masks: (-1)^inv
/// where inv counts pairs (a in A, b in B) with a > b.
inline int wedge_sign(Mono a, Mono b) {
  int inversions = 0;
  for (int i = 0; i < 8; ++i) {
    if (!(b & (Mono(1) << i))) continue;
    unsigned higher = a & ~((unsigned(1) << (i + 1)) - 1);
    inversions += std::popcount(higher);
  }
  return (inversions & 1) ? -1 : 1;
}

/// Graded exterior-algebra element over the fixed coframe, sparse map from
/// monomial masks to coefficients. Zero coefficients are never stored.
template <class K>
class Form {
public:
  using Scalar = K;

  Form() = default;

  static Form zero() { return Form(); }
  static Form scalar(K c) {
    Form f;
    f.add(0, std::move(c));
    return f;
  }
  static Form basis(CoframeIndex i) {
    Form f;
    f.add(Mono(1) << static_cast<int>(i), K(1));
    return f;
  }
  static Form monomial(Mono m, K c) {
    Form f;
    f.add(m, std::move(c));
    return f;
  }

  void add(Mono m, K c) {
    if (exactly_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, std::move(c));
    if (!inserted) {
      it->second += c;
      if (exactly_zero(it->second)) terms_.erase(it);
    }
  }

  const std::map<Mono, K>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  K coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  bool is_semibasic() const {
    for (const auto& [m, c] : terms_)
      if (m & kVerticalMask) return false;
    return true;
  }

  /// True if every stored monomial has the same degree; deg set to it
  /// (deg = -1 for the zero form).
  bool is_homogeneous(int& deg) const {
    deg = -1;
    for (const auto& [m, c] : terms_) {
      int d = mono_degree(m);
      if (deg == -1)
        deg = d;
      else if (d != deg)
        return false;
    }
    return true;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
  }

  Form degree_part(int k) const {
    Form out;
    for (const auto& [m, c] : terms_)
      if (mono_degree(m) == k) out.add(m, c);
    return out;
  }

  Form semibasic_part() const {
    Form out;
    for (const auto& [m, c] : terms_)
      if (!(m & kVerticalMask)) out.add(m, c);
    return out;
  }

  double max_abs_coeff() const {
    double mx = 0.0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, abs_value(c));
    return mx;
  }

  Form operator-() const {
    Form out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  Form& operator+=(const Form& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Form& operator-=(const Form& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const K& s, const Form& f) {
    Form out;
    if (exactly_zero(s)) return out;
    for (const auto& [m, c] : f.terms_) out.add(m, s * c);
    return out;
  }
  friend Form operator*(const Form& f, const K& s) { return s * f; }

  friend bool operator==(const Form& a, const Form& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print by (degree, mask) for readability
    for (int d = 0; d <= 8; ++d) {
      for (const auto& [m, c] : terms_) {
        if (mono_degree(m) != d) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff_str(c) << ")";
        for (int i = 0; i < 8; ++i)
          if (m & (Mono(1) << i)) os << "*" << coframe_name(static_cast<CoframeIndex>(i));
      }
    }
    return os.str();
  }

private:
  static std::string coeff_str(const Rational& c) { return c.str(); }
  static std::string coeff_str(const GaussRational& c) { return c.str(); }
  static std::string coeff_str(const Complex& c) {
    std::ostringstream os;
    os << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
    return os.str();
  }

  std::map<Mono, K> terms_;
};

template <class K>
Form<K> wedge(const Form<K>& f, const Form<K>& g) {
  Form<K> out;
  for (const auto& [ma, ca] : f.terms()) {
    for (const auto& [mb, cb] : g.terms()) {
      if (ma & mb) continue;
      int s = wedge_sign(ma, mb);
      K c = ca * cb;
      if (s < 0) c = -c;
      out.add(static_cast<Mono>(ma | mb), std::move(c));
    }
  }
  return out;
}

/// Extend a map on the 8 generators to an algebra morphism: each monomial
/// e_{i1}^...^e_{ik} maps to images[i1]^...^images[ik].
template <class K>
Form<K> substitute(const Form<K>& f, const std::array<Form<K>, 8>& images) {
  Form<K> out;
  for (const auto& [m, c] : f.terms()) {
    Form<K> acc = Form<K>::scalar(c);
    for (int i = 0; i < 8 && !acc.is_zero(); ++i)
      if (m & (Mono(1) << i)) acc = wedge(acc, images[i]);
    out += acc;
  }
  return out;
}

using QForm = Form<Rational>;
using CForm = Form<Complex>;
using GForm = Form<GaussRational>;

inline CForm to_complex_form(const QForm& f) {
  CForm out;
  for (const auto& [m, c] : f.terms()) out.add(m, to_complex(c));
  return out;
}
inline CForm to_complex_form(const GForm& f) {
  CForm out;
  for (const auto& [m, c] : f.terms()) out.add(m, to_complex(c));
  return out;
}

/// Complex conjugation in the real coframe: conjugate coefficients.
inline CForm conj(const CForm& f) {
  CForm out;
  for (const auto& [m, c] : f.terms()) out.add(m, std::conj(c));
  return out;
}
inline GForm conj(const GForm& f) {
  GForm out;
  for (const auto& [m, c] : f.terms()) out.add(m, c.conj());
  return out;
}

inline QForm real_part(const GForm& f) {
  QForm out;
  for (const auto& [m, c] : f.terms()) out.add(m, c.re);
  return out;
}
inline QForm imag_part(const GForm& f) {
  QForm out;
  for (const auto& [m, c] : f.terms()) out.add(m, c.im);
  return out;
}
inline GForm to_gauss_form(const QForm& f) {
  GForm out;
  for (const auto& [m, c] : f.terms()) out.add(m, GaussRational(c));
  return out;
}

} // namespace flagdt

#endif
