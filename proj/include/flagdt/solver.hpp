#ifndef FLAGDT_SOLVER_HPP
#define FLAGDT_SOLVER_HPP

#include <functional>
#include <string>
#include <vector>

#include "flagdt/gauge.hpp"

namespace flagdt {

enum class RootId { R1 = 0, R2 = 1, R3 = 2 };

Weight root_weight(RootId r);
const char* root_name(RootId r);
RootId root_from_name(const std::string& name);

/// Closed-form DT solution record; every constructed record is re-verified
/// through the residual evaluator before being returned.
struct DTSolution {
  RootId root;
  StructureParams params;
  double a = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  bool reducible = false;
  /// At the reducibility wall phi1 is a free parameter; the record carries
  /// the phi1 = 0 representative and this flag.
  bool phi1_degenerate = false;
  double slope = 0.0;
  ResidualReport residuals;
};

/// Per-root compatibility identity eps_i eps_j - eps_j eps_k + eps_i eps_k
/// (cyclic), which must equal 1 for irreducible solutions to exist.
double root_eps_identity(RootId r, const StructureParams& p);

/// Closed-form Higgs amplitude phi2 = A_i (eps_j eps_k + 1)/(2 eps_j eps_k A_j A_k).
double dt_phi2(RootId r, const StructureParams& p);

/// Invariant DT-instantons on P_{r_i}: two gauge-equivalent irreducible
/// solutions a = +-sqrt(-3 eps_i A_i^2 mu / 4) when eps_i mu(L_{r_i}) < 0
/// and the eps-identity holds; a single flagged reducible solution at the
/// wall; empty otherwise.
std::vector<DTSolution> solve_dt(RootId root, const StructureParams& p, double tol = kDefaultTol);

struct PhymSolution {
  RootId root;
  StructureParams params;
  double a = 0.0;
  bool reducible = false;
  double slope = 0.0;
  ResidualReport residuals;
};

/// Invariant irreducible pHYM connections: exist only when the
/// complementary pair carries opposite unit signs (integrable J) and
/// eps_i mu(L_{r_i}) < 0; the Nijenhuis tensor is asserted zero whenever
/// the list is nonempty.
std::vector<PhymSolution> solve_phym(RootId root, const StructureParams& p,
                                     double tol = kDefaultTol);

struct RootSummary {
  RootId root;
  double slope = 0.0;
  double existence = 0.0;  // eps_i * mu(L_{r_i})
  int n_solutions = 0;
  bool irreducible = false;
  bool reducible = false;
};

struct ExistenceSummary {
  StructureParams params;
  std::array<RootSummary, 3> roots;
  int total_solutions = 0;
  int irreducible_roots = 0;
  bool all_reducible = false;
};

/// Per-root slopes, counts and reducibility; on the eps = (1,1,1) family
/// the corollary dichotomy (at least one bundle with a solution; all
/// reducible exactly at A1 = A2 = A3) is asserted.
ExistenceSummary existence_summary(const StructureParams& p, double tol = kDefaultTol);

RootId weyl_root(WeylElement w, RootId r);

/// Named parameter path s -> params with a fixed sample grid. Samples use
/// the convex combination (lo*(n-1-i) + hi*i)/(n-1) so landmark values are
/// hit exactly.
struct PathSpec {
  std::string name;
  std::function<StructureParams(double)> at;
  double lo = 0.0;
  double hi = 1.0;
  int n = 2;

  double sample(int i) const {
    return (lo * static_cast<double>(n - 1 - i) + hi * static_cast<double>(i)) /
           static_cast<double>(n - 1);
  }
};

/// Built-in paths: "example4" (A = (1,1,s)), "example5" (A = (s,10 s^3,1)),
/// "corollary4" (Kahler wall family), "nk" (constant nearly Kahler point).
PathSpec builtin_path(const std::string& name, double lo, double hi, int n);
std::vector<std::string> builtin_path_names();

/// Path from six polynomials in s (coefficients in ascending degree) for
/// A1, A2, A3, eps1, eps2, eps3.
PathSpec polynomial_path(const std::array<std::vector<double>, 6>& coeffs, double lo, double hi,
                         int n);

enum class SolveMode { DT, PHYM };

struct ScanRow {
  double s = 0.0;
  RootId root = RootId::R1;
  bool valid = true;        // params valid at this sample
  bool has_solutions = false;
  double mu = 0.0;
  double a_plus = 0.0;
  double a_minus = 0.0;
  double phi2 = 0.0;        // meaningful in DT mode
  bool reducible = false;
};

struct ScanTable {
  PathSpec path;
  SolveMode mode = SolveMode::DT;
  std::vector<ScanRow> rows;  // ordered by sample, then root
};

ScanTable scan(const PathSpec& path, const std::vector<RootId>& roots,
               SolveMode mode = SolveMode::DT, double tol = kDefaultTol);

struct WallEvent {
  RootId root;
  double s = 0.0;                 // wall location, bisected to tolerance
  bool solutions_below = false;   // irreducible solutions on s < wall side
};

/// Sign changes of eps_i * mu(L_{r_i}) along the path, located by bisection.
std::vector<WallEvent> wall_cross(const PathSpec& path, RootId root, double s_tol = 1e-8);

} // namespace flagdt

#endif
