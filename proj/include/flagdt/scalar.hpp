#ifndef FLAGDT_SCALAR_HPP
#define FLAGDT_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>

namespace flagdt {

/// Exact backend: arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;

/// Float backend: complex double.
using Complex = std::complex<double>;

/// Gaussian rational a + b*i, used when exact arithmetic needs a complex
/// unit (Maurer-Cartan expansion, Chern-Weil traces).
struct GaussRational {
  Rational re{0};
  Rational im{0};

  GaussRational() = default;
  GaussRational(int v) : re(v) {}
  GaussRational(Rational r) : re(std::move(r)) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational unit_i() { return {Rational(0), Rational(1)}; }

  GaussRational operator-() const { return {-re, -im}; }
  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  GaussRational conj() const { return {re, -im}; }
  std::string str() const {
    return im == 0 ? re.str() : "(" + re.str() + "+" + im.str() + "i)";
  }
};

inline bool exactly_zero(const Rational& x) { return x == 0; }
inline bool exactly_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
inline bool exactly_zero(const GaussRational& x) { return x.re == 0 && x.im == 0; }

inline double abs_value(const Rational& x) {
  return std::abs(static_cast<double>(x));
}
inline double abs_value(const Complex& x) { return std::abs(x); }
inline double abs_value(const GaussRational& x) {
  return std::abs(Complex(static_cast<double>(x.re), static_cast<double>(x.im)));
}

inline Complex to_complex(const Rational& x) { return Complex(static_cast<double>(x), 0.0); }
inline Complex to_complex(const GaussRational& x) {
  return Complex(static_cast<double>(x.re), static_cast<double>(x.im));
}

inline Rational conj_scalar(const Rational& x) { return x; }
inline Complex conj_scalar(const Complex& x) { return std::conj(x); }
inline GaussRational conj_scalar(const GaussRational& x) { return x.conj(); }

} // namespace flagdt

#endif
