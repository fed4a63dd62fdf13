#ifndef FLAGDT_STRUCTURE_HPP
#define FLAGDT_STRUCTURE_HPP

#include <array>

#include "flagdt/form.hpp"

namespace flagdt {

/// Exterior derivatives of the 8 basis 1-forms, derived once by expanding
/// d(mu) = -mu ^ mu for the su(3) Maurer-Cartan form
///
///   mu = [  i b1        t3 + i e3   -t2 + i e2 ]
///        [ -t3 + i e3   i b2         t1 + i e1 ]
///        [  t2 + i e2  -t1 + i e1    i b3      ]     with b3 = -(b1 + b2),
///
/// stored as exact rationals. Construction cross-checks the redundant matrix
/// entries and validates d(d(x)) = 0 exactly on every basis 1-form.
class StructureTable {
public:
  StructureTable();

  const QForm& d_exact(CoframeIndex i) const { return d_exact_[static_cast<int>(i)]; }
  const QForm& d_exact(int i) const { return d_exact_[i]; }
  const CForm& d_complex(int i) const { return d_complex_[i]; }

  /// Exact d^2 residuals per basis 1-form; all must be identically zero.
  std::array<QForm, 8> d_squared_residuals() const;

  /// Process-wide validated instance.
  static const StructureTable& instance();

private:
  std::array<QForm, 8> d_exact_;
  std::array<CForm, 8> d_complex_;
};

namespace detail {

template <class K>
const Form<K>& table_entry(const StructureTable& t, int i);

template <>
inline const Form<Rational>& table_entry<Rational>(const StructureTable& t, int i) {
  return t.d_exact(i);
}
template <>
inline const Form<Complex>& table_entry<Complex>(const StructureTable& t, int i) {
  return t.d_complex(i);
}

} // namespace detail

/// Graded Leibniz extension of the structure table:
/// d(e_{i1}^...^e_{ik}) = sum_p (-1)^p d(e_{ip}) ^ e_{i1}^..^e_{ip-1}^e_{ip+1}^..
template <class K>
Form<K> exterior_derivative(const Form<K>& f, const StructureTable& table = StructureTable::instance()) {
  Form<K> out;
  for (const auto& [m, c] : f.terms()) {
    int pos = 0;
    for (int i = 0; i < 8; ++i) {
      if (!(m & (Mono(1) << i))) continue;
      Form<K> rest = Form<K>::monomial(static_cast<Mono>(m & ~(Mono(1) << i)), (pos & 1) ? -c : c);
      out += wedge(detail::table_entry<K>(table, i), rest);
      ++pos;
    }
  }
  return out;
}

} // namespace flagdt

#endif
