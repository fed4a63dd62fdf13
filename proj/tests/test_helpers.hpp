#ifndef FLAGDT_TEST_HELPERS_HPP
#define FLAGDT_TEST_HELPERS_HPP

#include <random>

#include "flagdt/flaggeom.hpp"

namespace flagdt::testing {

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  double amp() { return uniform(0.4, 2.0); }
  double sign() { return (gen() & 1) ? 1.0 : -1.0; }
  double real_eps() { return sign() * uniform(0.3, 2.0); }
  long weight_entry() { return std::uniform_int_distribution<long>(-9, 9)(gen); }

  StructureParams random_params_lattice() {
    return StructureParams(amp(), amp(), amp(), sign(), sign(), sign());
  }
  StructureParams random_params_eps1() {
    return StructureParams(amp(), amp(), amp(), 1.0, 1.0, 1.0);
  }
  StructureParams random_params_real() {
    return StructureParams(amp(), amp(), amp(), real_eps(), real_eps(), real_eps());
  }
};

inline CForm re(const CForm& f) { return Complex(0.5, 0.0) * (f + conj(f)); }
inline CForm im(const CForm& f) { return (Complex(1.0, 0.0) / Complex(0.0, 2.0)) * (f - conj(f)); }

} // namespace flagdt::testing

#endif
