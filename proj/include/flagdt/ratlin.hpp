#ifndef FLAGDT_RATLIN_HPP
#define FLAGDT_RATLIN_HPP

#include <optional>
#include <vector>

#include "flagdt/scalar.hpp"

namespace flagdt {

/// Exact Gaussian elimination. Returns a particular solution of M x = b
/// (free variables set to zero) or nullopt if the system is infeasible.
/// Pivot order is fixed by the matrix alone, so the returned solution is
/// linear in b.
inline std::optional<std::vector<Rational>> solve_exact(
    std::vector<std::vector<Rational>> M, std::vector<Rational> b) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows ? M[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && M[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[r]);
    std::swap(b[piv], b[r]);
    const Rational inv = Rational(1) / M[r][c];
    for (std::size_t j = c; j < cols; ++j) M[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      const Rational f = M[i][c];
      for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;

  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

} // namespace flagdt

#endif
