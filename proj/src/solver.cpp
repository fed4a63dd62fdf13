#include "flagdt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace flagdt {

namespace {

constexpr double kWallTol = 1e-12;

int idx(RootId r) { return static_cast<int>(r); }

void verify_dt(DTSolution& sol, double tol) {
  InvariantConnection conn(root_weight(sol.root), sol.a);
  sol.residuals = detail::higgs_residual(connection_form(conn),
                                         HiggsPair{sol.phi1, sol.phi2}, sol.params);
  if (sol.residuals.max_filled() > tol) {
    std::ostringstream os;
    os << "constructed DT solution failed re-verification (residual "
       << sol.residuals.max_filled() << ")";
    throw ConsistencyError(os.str());
  }
}

void verify_phym(PhymSolution& sol, double tol) {
  InvariantConnection conn(root_weight(sol.root), sol.a);
  sol.residuals = phym_residual(conn, sol.params);
  if (sol.residuals.max_filled() > tol)
    throw ConsistencyError("constructed pHYM connection failed re-verification");
}

} // namespace

Weight root_weight(RootId r) {
  switch (r) {
    case RootId::R1: return Weight{1, 2};
    case RootId::R2: return Weight{-2, -1};
    case RootId::R3: return Weight{1, -1};
  }
  throw InvalidParams("unknown root");
}

const char* root_name(RootId r) {
  static const char* names[3] = {"r1", "r2", "r3"};
  return names[idx(r)];
}

RootId root_from_name(const std::string& name) {
  if (name == "r1") return RootId::R1;
  if (name == "r2") return RootId::R2;
  if (name == "r3") return RootId::R3;
  throw InvalidParams("root must be one of r1, r2, r3 (got '" + name + "')");
}

double root_eps_identity(RootId r, const StructureParams& p) {
  const int i = idx(r), j = (i + 1) % 3, k = (i + 2) % 3;
  return p.eps[i] * p.eps[j] - p.eps[j] * p.eps[k] + p.eps[i] * p.eps[k];
}

double dt_phi2(RootId r, const StructureParams& p) {
  const int i = idx(r), j = (i + 1) % 3, k = (i + 2) % 3;
  return p.A[i] * (p.eps[j] * p.eps[k] + 1.0) /
         (2.0 * p.eps[j] * p.eps[k] * p.A[j] * p.A[k]);
}

std::vector<DTSolution> solve_dt(RootId root, const StructureParams& p, double tol) {
  p.validate();
  const int i = idx(root);
  const double mu = slope(root_weight(root), p, tol);
  const double a_sq = -0.75 * p.eps[i] * p.A[i] * p.A[i] * mu;

  std::vector<DTSolution> out;
  const double scale = std::max(1.0, std::abs(a_sq));
  if (std::abs(a_sq) <= kWallTol * scale) {
    DTSolution sol;
    sol.root = root;
    sol.params = p;
    sol.a = 0.0;
    sol.phi1 = 0.0;
    sol.phi2 = dt_phi2(root, p);
    sol.reducible = true;
    sol.phi1_degenerate = true;
    sol.slope = mu;
    verify_dt(sol, tol);
    out.push_back(sol);
    return out;
  }
  if (a_sq < 0.0) return out;

  // Irreducible branch: the two remaining Higgs equations are compatible
  // only when the per-root eps identity holds.
  if (std::abs(root_eps_identity(root, p) - 1.0) > tol) return out;

  const double a = std::sqrt(a_sq);
  for (double sign : {+1.0, -1.0}) {
    DTSolution sol;
    sol.root = root;
    sol.params = p;
    sol.a = sign * a;
    sol.phi1 = 0.0;
    sol.phi2 = dt_phi2(root, p);
    sol.reducible = false;
    sol.slope = mu;
    verify_dt(sol, tol);
    out.push_back(sol);
  }
  return out;
}

std::vector<PhymSolution> solve_phym(RootId root, const StructureParams& p, double tol) {
  p.validate();
  const int i = idx(root), j = (i + 1) % 3, k = (i + 2) % 3;

  std::vector<PhymSolution> out;
  // Complementary pair must carry opposite unit signs; all such almost
  // complex structures are integrable.
  const bool pattern = std::abs(std::abs(p.eps[j]) - 1.0) <= tol &&
                       std::abs(std::abs(p.eps[k]) - 1.0) <= tol &&
                       std::abs(p.eps[j] * p.eps[k] + 1.0) <= tol;
  if (!pattern) return out;

  const double mu = slope(root_weight(root), p, tol);
  const double a_sq = -0.75 * p.eps[i] * p.A[i] * p.A[i] * mu;
  const double scale = std::max(1.0, std::abs(a_sq));
  if (a_sq < -kWallTol * scale) return out;

  auto nij = nijenhuis(p, tol);
  for (double n : nij)
    if (std::abs(n) > tol)
      throw ConsistencyError("pHYM existence pattern holds but Nijenhuis tensor is nonzero");

  if (std::abs(a_sq) <= kWallTol * scale) {
    PhymSolution sol;
    sol.root = root;
    sol.params = p;
    sol.a = 0.0;
    sol.reducible = true;
    sol.slope = mu;
    verify_phym(sol, tol);
    out.push_back(sol);
    return out;
  }

  const double a = std::sqrt(a_sq);
  for (double sign : {+1.0, -1.0}) {
    PhymSolution sol;
    sol.root = root;
    sol.params = p;
    sol.a = sign * a;
    sol.reducible = false;
    sol.slope = mu;
    verify_phym(sol, tol);
    out.push_back(sol);
  }
  return out;
}

ExistenceSummary existence_summary(const StructureParams& p, double tol) {
  p.validate();
  ExistenceSummary sum;
  sum.params = p;
  for (RootId r : {RootId::R1, RootId::R2, RootId::R3}) {
    RootSummary& rs = sum.roots[idx(r)];
    rs.root = r;
    rs.slope = slope(root_weight(r), p, tol);
    rs.existence = p.eps[idx(r)] * rs.slope;
    auto sols = solve_dt(r, p, tol);
    rs.n_solutions = static_cast<int>(sols.size());
    for (const auto& s : sols) {
      rs.irreducible = rs.irreducible || !s.reducible;
      rs.reducible = rs.reducible || s.reducible;
    }
    sum.total_solutions += rs.n_solutions;
    if (rs.irreducible) ++sum.irreducible_roots;
  }
  sum.all_reducible = sum.total_solutions > 0 && sum.irreducible_roots == 0;

  if (p.eps_all_one(tol)) {
    if (sum.total_solutions == 0)
      throw ConsistencyError("existence dichotomy violated: no solutions on any root");
    const bool a_equal = std::abs(p.A[0] - p.A[1]) <= tol * p.A[0] &&
                         std::abs(p.A[1] - p.A[2]) <= tol * p.A[1];
    if (sum.all_reducible != a_equal)
      throw ConsistencyError("all-reducible locus must be exactly A1 = A2 = A3");
  }
  return sum;
}

RootId weyl_root(WeylElement w, RootId r) {
  const int i = idx(r);
  switch (w) {
    case WeylElement::Identity: return r;
    case WeylElement::Sigma: return static_cast<RootId>((i + 1) % 3);
    case WeylElement::SigmaSq: return static_cast<RootId>((i + 2) % 3);
    case WeylElement::P1: return static_cast<RootId>(i == 0 ? 0 : 3 - i);        // swaps r2, r3
    case WeylElement::P2: return static_cast<RootId>(i == 1 ? 1 : 2 - i);        // swaps r1, r3
    case WeylElement::P3: return static_cast<RootId>(i == 2 ? 2 : 1 - i);        // swaps r1, r2
  }
  throw InvalidParams("unknown Weyl element");
}

PathSpec builtin_path(const std::string& name, double lo, double hi, int n) {
  if (n < 2) throw InvalidParams("path needs at least 2 samples");
  PathSpec spec;
  spec.name = name;
  spec.lo = lo;
  spec.hi = hi;
  spec.n = n;
  if (name == "example4") {
    spec.at = [](double s) { return StructureParams(1.0, 1.0, s, 1.0, 1.0, 1.0); };
  } else if (name == "example5") {
    spec.at = [](double s) { return StructureParams(s, 10.0 * s * s * s, 1.0, 1.0, 1.0, 1.0); };
  } else if (name == "corollary4") {
    spec.at = [](double s) {
      const double c = 2.0 - std::sqrt(3.0);  // 1/(2 + sqrt(3))
      return StructureParams(1.0, std::sqrt(c), s, s * s - c, 1.0, -1.0);
    };
  } else if (name == "nk") {
    spec.at = [](double) { return StructureParams(1.0, 1.0, 1.0, 1.0, 1.0, 1.0); };
  } else {
    std::ostringstream os;
    os << "unknown path '" << name << "'; available:";
    for (const auto& p : builtin_path_names()) os << " " << p;
    throw InvalidParams(os.str());
  }
  return spec;
}

std::vector<std::string> builtin_path_names() {
  return {"example4", "example5", "corollary4", "nk"};
}

PathSpec polynomial_path(const std::array<std::vector<double>, 6>& coeffs, double lo, double hi,
                         int n) {
  if (n < 2) throw InvalidParams("path needs at least 2 samples");
  PathSpec spec;
  spec.name = "poly";
  spec.lo = lo;
  spec.hi = hi;
  spec.n = n;
  spec.at = [coeffs](double s) {
    std::array<double, 6> v{};
    for (int i = 0; i < 6; ++i) {
      double acc = 0.0;
      for (std::size_t d = coeffs[i].size(); d-- > 0;) acc = acc * s + coeffs[i][d];
      v[i] = acc;
    }
    return StructureParams(v[0], v[1], v[2], v[3], v[4], v[5]);
  };
  return spec;
}

ScanTable scan(const PathSpec& path, const std::vector<RootId>& roots, SolveMode mode,
               double tol) {
  if (path.n < 2) throw InvalidParams("scan needs at least 2 samples");
  ScanTable table;
  table.path = path;
  table.mode = mode;
  table.rows.reserve(static_cast<std::size_t>(path.n) * roots.size());
  for (int i = 0; i < path.n; ++i) {
    const double s = path.sample(i);
    for (RootId r : roots) {
      ScanRow row;
      row.s = s;
      row.root = r;
      try {
        StructureParams p = path.at(s);
        p.validate();
        row.mu = slope(root_weight(r), p, tol);
        if (mode == SolveMode::DT) {
          auto sols = solve_dt(r, p, tol);
          row.has_solutions = !sols.empty();
          if (row.has_solutions) {
            row.reducible = sols.front().reducible;
            row.phi2 = sols.front().phi2;
            double amax = 0.0;
            for (const auto& sol : sols) amax = std::max(amax, sol.a);
            row.a_plus = amax;
            row.a_minus = -amax;
          }
        } else {
          auto sols = solve_phym(r, p, tol);
          row.has_solutions = !sols.empty();
          if (row.has_solutions) {
            row.reducible = sols.front().reducible;
            double amax = 0.0;
            for (const auto& sol : sols) amax = std::max(amax, sol.a);
            row.a_plus = amax;
            row.a_minus = -amax;
          }
        }
      } catch (const InvalidParams&) {
        row.valid = false;
      }
      table.rows.push_back(row);
    }
  }
  return table;
}

std::vector<WallEvent> wall_cross(const PathSpec& path, RootId root, double s_tol) {
  const int i = idx(root);
  auto existence = [&](double s) {
    StructureParams p = path.at(s);
    p.validate();
    return p.eps[i] * slope(root_weight(root), p);
  };

  std::vector<double> f(path.n);
  double fscale = 0.0;
  for (int k = 0; k < path.n; ++k) {
    f[k] = existence(path.sample(k));
    fscale = std::max(fscale, std::abs(f[k]));
  }
  const double tiny = 1e-13 * std::max(1.0, fscale);
  auto near_zero = [&](double v) { return std::abs(v) <= tiny; };

  std::vector<WallEvent> events;
  // Walls sitting exactly on grid nodes (plateaus of zeros report nothing:
  // the path runs along the wall, it does not cross it).
  for (int k = 0; k < path.n; ++k) {
    if (!near_zero(f[k])) continue;
    const bool left = k > 0 && !near_zero(f[k - 1]);
    const bool right = k + 1 < path.n && !near_zero(f[k + 1]);
    if (!left && !right) continue;
    WallEvent ev;
    ev.root = root;
    ev.s = path.sample(k);
    ev.solutions_below = left ? f[k - 1] < 0.0 : f[k + 1] > 0.0;
    events.push_back(ev);
  }
  // Sign changes between nodes, refined by bisection.
  for (int k = 0; k + 1 < path.n; ++k) {
    if (near_zero(f[k]) || near_zero(f[k + 1]) || f[k] * f[k + 1] > 0.0) continue;
    double lo = path.sample(k), hi = path.sample(k + 1);
    double flo = f[k];
    while (hi - lo > s_tol) {
      const double mid = 0.5 * (lo + hi);
      const double fm = existence(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    WallEvent ev;
    ev.root = root;
    ev.s = 0.5 * (lo + hi);
    ev.solutions_below = f[k] < 0.0;  // solutions exist where eps*mu < 0
    events.push_back(ev);
  }
  std::sort(events.begin(), events.end(),
            [](const WallEvent& a, const WallEvent& b) { return a.s < b.s; });
  return events;
}

} // namespace flagdt
