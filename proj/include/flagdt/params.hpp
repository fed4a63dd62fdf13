#ifndef FLAGDT_PARAMS_HPP
#define FLAGDT_PARAMS_HPP

#include <array>
#include <cmath>
#include <sstream>

#include "flagdt/errors.hpp"
#include "flagdt/scalar.hpp"

namespace flagdt {

/// Frame scales A_i > 0 and shape parameters eps_i != 0. The normalized
/// case eps_i in {+1,-1} matches the two-component family of invariant
/// almost Hermitian structures; real eps extends it.
struct StructureParams {
  std::array<double, 3> A{1.0, 1.0, 1.0};
  std::array<double, 3> eps{1.0, 1.0, 1.0};

  StructureParams() = default;
  StructureParams(double a1, double a2, double a3, double e1, double e2, double e3)
      : A{a1, a2, a3}, eps{e1, e2, e3} {
    validate();
  }

  void validate() const {
    static const char* an[3] = {"A1", "A2", "A3"};
    static const char* en[3] = {"eps1", "eps2", "eps3"};
    for (int i = 0; i < 3; ++i) {
      if (!(A[i] > 0.0) || !std::isfinite(A[i])) {
        std::ostringstream os;
        os << an[i] << " must be positive (got " << A[i] << ")";
        throw InvalidParams(os.str());
      }
      if (eps[i] == 0.0 || !std::isfinite(eps[i])) {
        std::ostringstream os;
        os << en[i] << " must be nonzero (got " << eps[i] << ")";
        throw InvalidParams(os.str());
      }
    }
  }

  bool is_normalized(double tol = kDefaultTol) const {
    for (double e : eps)
      if (std::abs(std::abs(e) - 1.0) > tol) return false;
    return true;
  }

  bool eps_all_one(double tol = kDefaultTol) const {
    for (double e : eps)
      if (std::abs(e - 1.0) > tol) return false;
    return true;
  }
};

/// Exact-rational mirror of StructureParams, used when the inputs arrive as
/// rational literals and the requested computation supports the exact path.
struct RationalParams {
  std::array<Rational, 3> A{Rational(1), Rational(1), Rational(1)};
  std::array<Rational, 3> eps{Rational(1), Rational(1), Rational(1)};

  void validate() const {
    for (int i = 0; i < 3; ++i) {
      if (A[i] <= 0) throw InvalidParams("A must be positive");
      if (eps[i] == 0) throw InvalidParams("eps must be nonzero");
    }
  }

  StructureParams to_double() const {
    return StructureParams(static_cast<double>(A[0]), static_cast<double>(A[1]),
                           static_cast<double>(A[2]), static_cast<double>(eps[0]),
                           static_cast<double>(eps[1]), static_cast<double>(eps[2]));
  }
};

} // namespace flagdt

#endif
