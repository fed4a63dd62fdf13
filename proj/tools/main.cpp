#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagdt/bundles.hpp"
#include "flagdt/flaggeom.hpp"
#include "flagdt/gauge.hpp"
#include "flagdt/solver.hpp"

using json = nlohmann::ordered_json;
using namespace flagdt;

namespace {

std::string fmt_g(double x, int digits = 12) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

std::optional<Rational> parse_rational(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) return std::nullopt;
    return Rational(boost::multiprecision::cpp_int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  boost::multiprecision::cpp_int d(den);
  if (d == 0) return std::nullopt;
  return Rational(boost::multiprecision::cpp_int(num), d);
}

struct ParsedParams {
  StructureParams value{};
  std::optional<RationalParams> exact;
};

ParsedParams parse_params(const std::vector<std::string>& raw) {
  if (raw.size() != 6)
    throw InvalidParams("--params expects 6 values: A1 A2 A3 eps1 eps2 eps3");
  RationalParams rp;
  bool all_exact = true;
  std::array<double, 6> vals{};
  for (int i = 0; i < 6; ++i) {
    auto r = parse_rational(raw[i]);
    if (r) {
      if (i < 3)
        rp.A[i] = *r;
      else
        rp.eps[i - 3] = *r;
      vals[i] = static_cast<double>(*r);
    } else {
      all_exact = false;
      char* end = nullptr;
      vals[i] = std::strtod(raw[i].c_str(), &end);
      if (end == raw[i].c_str() || *end != '\0')
        throw InvalidParams("could not parse parameter '" + raw[i] + "'");
    }
  }
  ParsedParams out;
  out.value = StructureParams(vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]);
  if (all_exact) out.exact = rp;
  return out;
}

json params_json(const ParsedParams& p) {
  json j;
  j["A"] = {p.value.A[0], p.value.A[1], p.value.A[2]};
  j["eps"] = {p.value.eps[0], p.value.eps[1], p.value.eps[2]};
  j["exact_backend"] = p.exact.has_value();
  return j;
}

json residuals_json(const ResidualReport& r) {
  json j;
  if (r.eq32_norm) j["eq32"] = *r.eq32_norm;
  if (r.eq33_norm) j["eq33"] = *r.eq33_norm;
  if (r.eq34_norm) j["eq34"] = *r.eq34_norm;
  if (r.f02_norm) j["f02"] = *r.f02_norm;
  if (r.lambdaF_norm) j["lambdaF"] = *r.lambdaF_norm;
  if (r.raw24_norm) j["raw24"] = *r.raw24_norm;
  if (r.raw25_norm) j["raw25"] = *r.raw25_norm;
  return j;
}

double env_tolerance() {
  if (const char* s = std::getenv("FLAGDT_TOL")) {
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end != s && v > 0.0) return v;
  }
  return kDefaultTol;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const ParsedParams& p, double tol, std::ostream& os) {
  ClassificationFlags flags =
      p.exact ? classify_exact(*p.exact) : classify(p.value, tol);
  auto nij = nijenhuis(p.value);
  json j;
  j["schema"] = "flagdt.classify/1";
  j["params"] = params_json(p);
  j["flags"] = {{"integrable", flags.integrable},
                {"symplectic", flags.symplectic},
                {"kahler", flags.kahler},
                {"half_flat", flags.half_flat},
                {"nearly_kahler_up_to_scale", flags.nearly_kahler_up_to_scale},
                {"kahler_einstein", flags.kahler_einstein}};
  j["nijenhuis"] = {nij[0], nij[1], nij[2]};
  os << j.dump(2) << "\n";
  return 0;
}

// ------------------------------------------------------------------- solve

int cmd_solve(const ParsedParams& p, const std::string& mode, double tol, std::ostream& os) {
  json j;
  j["schema"] = "flagdt.solve/1";
  j["mode"] = mode;
  j["params"] = params_json(p);
  j["roots"] = json::array();

  if (mode == "dt") {
    const double prod = p.value.eps[0] * p.value.eps[1] * p.value.eps[2];
    if (std::abs(prod - 1.0) > tol)
      throw PreconditionError(
          "dt mode requires eps1*eps2*eps3 = 1: Omega is basic on F2 only then, and the "
          "Higgs-pair form of the equations needs it");
  }

  for (RootId r : {RootId::R1, RootId::R2, RootId::R3}) {
    json entry;
    entry["root"] = root_name(r);
    entry["mu"] = slope(root_weight(r), p.value, tol);
    entry["solutions"] = json::array();
    if (mode == "dt") {
      for (const auto& sol : solve_dt(r, p.value, tol)) {
        json js;
        js["a"] = sol.a;
        js["phi1"] = sol.phi1;
        js["phi2"] = sol.phi2;
        js["reducible"] = sol.reducible;
        if (sol.phi1_degenerate) js["phi1_degenerate"] = true;
        js["residuals"] = residuals_json(sol.residuals);
        entry["solutions"].push_back(js);
      }
    } else if (mode == "phym") {
      for (const auto& sol : solve_phym(r, p.value, tol)) {
        json js;
        js["a"] = sol.a;
        js["reducible"] = sol.reducible;
        js["residuals"] = residuals_json(sol.residuals);
        entry["solutions"].push_back(js);
      }
    } else {
      throw InvalidParams("--mode must be dt or phym");
    }
    j["roots"].push_back(entry);
  }
  os << j.dump(2) << "\n";
  return 0;
}

// -------------------------------------------------------------------- scan

std::string csv_of(const ScanTable& table) {
  std::string out = "s,root,mu,a_plus,a_minus,phi2,reducible\n";
  for (const auto& row : table.rows) {
    out += fmt_g(row.s, 10);
    out += ",";
    out += root_name(row.root);
    out += ",";
    if (!row.valid) {
      out += ",,,,invalid\n";
      continue;
    }
    out += fmt_g(row.mu);
    out += ",";
    if (row.has_solutions) {
      out += fmt_g(row.a_plus);
      out += ",";
      out += fmt_g(row.a_minus);
      out += ",";
      if (table.mode == SolveMode::DT) out += fmt_g(row.phi2);
      out += ",";
      out += row.reducible ? "1" : "0";
    } else {
      out += ",,,";
    }
    out += "\n";
  }
  return out;
}

std::string svg_of(const ScanTable& table) {
  const double W = 640, H = 420, ml = 56, mr = 16, mt = 28, mb = 40;
  double amax = 0.0;
  for (const auto& r : table.rows)
    if (r.valid && r.has_solutions) amax = std::max(amax, std::abs(r.a_plus));
  if (amax == 0.0) amax = 1.0;
  amax *= 1.08;
  const double lo = table.path.lo, hi = table.path.hi;
  auto X = [&](double s) { return ml + (s - lo) / (hi - lo) * (W - ml - mr); };
  auto Y = [&](double a) { return mt + (amax - a) / (2 * amax) * (H - mt - mb); };

  static const char* colors[3] = {"#1f77b4", "#d62728", "#2ca02c"};
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_g(W, 6) + "\" height=\"" +
         fmt_g(H, 6) + "\" viewBox=\"0 0 " + fmt_g(W, 6) + " " + fmt_g(H, 6) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  svg += "<line x1=\"" + fmt_g(ml, 6) + "\" y1=\"" + fmt_g(Y(0), 6) + "\" x2=\"" +
         fmt_g(W - mr, 6) + "\" y2=\"" + fmt_g(Y(0), 6) + "\" stroke=\"#888\"/>\n";
  svg += "<line x1=\"" + fmt_g(ml, 6) + "\" y1=\"" + fmt_g(mt, 6) + "\" x2=\"" + fmt_g(ml, 6) +
         "\" y2=\"" + fmt_g(H - mb, 6) + "\" stroke=\"#888\"/>\n";
  svg += "<text x=\"" + fmt_g(W / 2, 6) + "\" y=\"" + fmt_g(H - 8, 6) +
         "\" text-anchor=\"middle\" font-size=\"13\">s</text>\n";
  svg += "<text x=\"14\" y=\"" + fmt_g(H / 2, 6) + "\" font-size=\"13\">a</text>\n";
  svg += "<text x=\"" + fmt_g(ml, 6) + "\" y=\"" + fmt_g(H - mb + 16, 6) +
         "\" text-anchor=\"middle\" font-size=\"11\">" + fmt_g(lo, 6) + "</text>\n";
  svg += "<text x=\"" + fmt_g(W - mr, 6) + "\" y=\"" + fmt_g(H - mb + 16, 6) +
         "\" text-anchor=\"middle\" font-size=\"11\">" + fmt_g(hi, 6) + "</text>\n";

  for (int rid = 0; rid < 3; ++rid) {
    for (int sign = 0; sign < 2; ++sign) {
      std::string pts;
      bool open = false;
      auto flush = [&]() {
        if (open && !pts.empty())
          svg += "<polyline fill=\"none\" stroke=\"" + std::string(colors[rid]) +
                 "\" stroke-width=\"1.6\" points=\"" + pts + "\"/>\n";
        pts.clear();
        open = false;
      };
      for (const auto& row : table.rows) {
        if (static_cast<int>(row.root) != rid) continue;
        if (!row.valid || !row.has_solutions) {
          flush();
          continue;
        }
        const double a = sign == 0 ? row.a_plus : row.a_minus;
        pts += fmt_g(X(row.s), 8) + "," + fmt_g(Y(a), 8) + " ";
        open = true;
      }
      flush();
    }
    svg += "<text x=\"" + fmt_g(W - mr - 60, 6) + "\" y=\"" + fmt_g(mt + 16 * (rid + 1), 6) +
           "\" font-size=\"12\" fill=\"" + colors[rid] + "\">" +
           root_name(static_cast<RootId>(rid)) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::array<std::vector<double>, 6> parse_curve(const std::string& spec) {
  std::array<std::vector<double>, 6> coeffs;
  std::stringstream ss(spec);
  std::string part;
  int i = 0;
  while (std::getline(ss, part, ':')) {
    if (i >= 6) throw InvalidParams("--curve takes 6 colon-separated polynomials");
    std::stringstream cs(part);
    std::string c;
    while (std::getline(cs, c, ',')) coeffs[i].push_back(std::stod(c));
    if (coeffs[i].empty()) throw InvalidParams("--curve polynomial must have coefficients");
    ++i;
  }
  if (i != 6) throw InvalidParams("--curve takes 6 colon-separated polynomials");
  return coeffs;
}

int cmd_scan(const std::string& path_name, const std::string& curve, double lo, double hi, int n,
             const std::string& mode_name, const std::string& format, const std::string& out_file,
             double tol, std::ostream& os) {
  PathSpec path = curve.empty() ? builtin_path(path_name, lo, hi, n)
                                : polynomial_path(parse_curve(curve), lo, hi, n);
  SolveMode mode;
  if (mode_name == "dt")
    mode = SolveMode::DT;
  else if (mode_name == "phym")
    mode = SolveMode::PHYM;
  else
    throw InvalidParams("--mode must be dt or phym");

  std::vector<RootId> roots = {RootId::R1, RootId::R2, RootId::R3};
  ScanTable table = scan(path, roots, mode, tol);

  std::vector<WallEvent> walls;
  for (RootId r : roots) {
    try {
      auto ev = wall_cross(path, r);
      walls.insert(walls.end(), ev.begin(), ev.end());
    } catch (const InvalidParams&) {
      // path leaves the valid parameter domain somewhere; wall scan skipped
    }
  }

  std::string payload;
  if (format == "csv") {
    payload = csv_of(table);
  } else if (format == "svg") {
    payload = svg_of(table);
  } else if (format == "json") {
    json j;
    j["schema"] = "flagdt.scan/1";
    j["path"] = path.name;
    j["mode"] = mode_name;
    j["rows"] = json::array();
    for (const auto& row : table.rows) {
      json jr;
      jr["s"] = row.s;
      jr["root"] = root_name(row.root);
      jr["valid"] = row.valid;
      if (row.valid) {
        jr["mu"] = row.mu;
        if (row.has_solutions) {
          jr["a_plus"] = row.a_plus;
          jr["a_minus"] = row.a_minus;
          if (mode == SolveMode::DT) jr["phi2"] = row.phi2;
          jr["reducible"] = row.reducible;
        }
      }
      j["rows"].push_back(jr);
    }
    j["walls"] = json::array();
    for (const auto& w : walls)
      j["walls"].push_back({{"root", root_name(w.root)},
                            {"s", w.s},
                            {"solutions", w.solutions_below ? "below" : "above"}});
    payload = j.dump(2) + "\n";
  } else {
    throw InvalidParams("--format must be csv, json or svg");
  }

  if (out_file.empty()) {
    os << payload;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw InvalidParams("cannot open output file '" + out_file + "'");
    f << payload;
  }
  for (const auto& w : walls)
    std::cerr << "wall: root=" << root_name(w.root) << " s=" << fmt_g(w.s)
              << " solutions=" << (w.solutions_below ? "below" : "above") << "\n";
  return 0;
}

// --------------------------------------------------------------- charclass

int cmd_charclass(long k, long l, std::ostream& os) {
  CharClassReport rep = char_classes(Weight{k, l});
  auto as_int = [](const Rational& r) {
    return boost::multiprecision::numerator(r).convert_to<long long>();
  };
  json j;
  j["schema"] = "flagdt.charclass/1";
  j["weight"] = {{"k", k}, {"l", l}};
  j["c1"] = {{"coords", {as_int(rep.c1.x), as_int(rep.c1.y)}},
             {"unit", "1/(2*pi)"},
             {"basis", "[d(beta1)], [d(beta2)]"}};
  j["c2"] = {{"coords", {as_int(rep.c2.p), as_int(rep.c2.q)}},
             {"unit", "1/(4*pi^2)"},
             {"basis", "[d(beta1)]^2, [d(beta2)]^2"}};
  j["w2"] = {rep.w2[0], rep.w2[1]};
  j["p1"] = {{"coords", {as_int(rep.p1.p), as_int(rep.p1.q)}},
             {"unit", "1/(4*pi^2)"},
             {"basis", "[d(beta1)]^2, [d(beta2)]^2"}};
  os << j.dump(2) << "\n";
  return 0;
}

// ------------------------------------------------------------------ verify

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> run_verify(double tol, const std::string& only) {
  std::vector<CheckResult> results;
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> ua(0.4, 2.0);
  std::uniform_int_distribution<int> ui(-9, 9);
  auto rand_eps = [&]() {
    double e = ua(rng);
    return (rng() & 1) ? e : -e;
  };
  auto want = [&](const std::string& name) {
    return only.empty() || name.find(only) != std::string::npos;
  };

  if (want("structure-d2")) {
    auto res = StructureTable::instance().d_squared_residuals();
    bool ok = true;
    for (const auto& r : res) ok = ok && r.is_zero();
    results.push_back({"structure-d2", ok, "d^2 = 0 exactly on all 8 basis 1-forms"});
  }

  if (want("eq52")) {
    double worst = 0.0;
    for (int it = 0; it < 20; ++it) {
      StructureParams p(ua(rng), ua(rng), ua(rng), rand_eps(), rand_eps(), rand_eps());
      long k = ui(rng), l = ui(rng);
      Frame fr(p);
      CForm lhs = exterior_derivative(Complex(double(k), 0) * CForm::basis(CoframeIndex::Beta1) +
                                      Complex(double(l), 0) * CForm::basis(CoframeIndex::Beta2));
      Complex I(0, 1);
      CForm rhs = (I * double(l) / (p.eps[0] * p.A[0] * p.A[0])) * wedge(fr.alpha(0), fr.alpha_bar(0));
      rhs += (-I * double(k) / (p.eps[1] * p.A[1] * p.A[1])) * wedge(fr.alpha(1), fr.alpha_bar(1));
      rhs += (I * double(k - l) / (p.eps[2] * p.A[2] * p.A[2])) * wedge(fr.alpha(2), fr.alpha_bar(2));
      worst = std::max(worst, (lhs - rhs).max_abs_coeff());
    }
    results.push_back({"eq52", worst < tol, "max coefficient error " + fmt_g(worst, 3)});
  }

  if (want("nijenhuis-dual")) {
    bool ok = true;
    std::string detail = "closed form matches (0,2)-projection";
    try {
      for (int mask = 0; mask < 8; ++mask)
        for (int it = 0; it < 10; ++it)
          nijenhuis(StructureParams(ua(rng), ua(rng), ua(rng), (mask & 1) ? 1 : -1,
                                    (mask & 2) ? 1 : -1, (mask & 4) ? 1 : -1),
                    tol);
      for (int it = 0; it < 10; ++it)
        nijenhuis(StructureParams(ua(rng), ua(rng), ua(rng), rand_eps(), rand_eps(), rand_eps()),
                  tol);
    } catch (const ConsistencyError& e) {
      ok = false;
      detail = e.what();
    }
    results.push_back({"nijenhuis-dual", ok, detail});
  }

  if (want("domega-gamma")) {
    bool ok = true;
    std::string detail = "d(omega) = Re(gamma), NK calibration anchored";
    try {
      for (int it = 0; it < 20; ++it) {
        StructureParams p(ua(rng), ua(rng), ua(rng), rand_eps(), rand_eps(), rand_eps());
        d_omega_decompose(build_structure(p), tol);
      }
    } catch (const ConsistencyError& e) {
      ok = false;
      detail = e.what();
    }
    results.push_back({"domega-gamma", ok, detail});
  }

  if (want("slope-dual")) {
    bool ok = true;
    std::string detail = "Eq closed form matches top-form ratio";
    try {
      for (int it = 0; it < 50; ++it) {
        StructureParams p(ua(rng), ua(rng), ua(rng), rand_eps(), rand_eps(), rand_eps());
        slope(Weight{ui(rng), ui(rng)}, p, tol);
      }
    } catch (const ConsistencyError& e) {
      ok = false;
      detail = e.what();
    }
    results.push_back({"slope-dual", ok, detail});
  }

  if (want("curvature-prop7")) {
    double worst = 0.0;
    for (int it = 0; it < 20; ++it) {
      StructureParams p(ua(rng), ua(rng), ua(rng), rand_eps(), rand_eps(), rand_eps());
      const double a = ua(rng) - 1.2;
      Frame fr(p);
      auto F = curvature(InvariantConnection(Weight{1, 2}, a));
      Complex I(0, 1);
      const double e1 = p.eps[0], e2 = p.eps[1], e3 = p.eps[2];
      const double A1 = p.A[0], A2 = p.A[1], A3 = p.A[2];
      CForm F1 = (I * (1 - a * a) / (e1 * A1 * A1)) * wedge(fr.alpha(0), fr.alpha_bar(0)) +
                 (-I / (2 * e2 * A2 * A2)) * wedge(fr.alpha(1), fr.alpha_bar(1)) +
                 (-I / (2 * e3 * A3 * A3)) * wedge(fr.alpha(2), fr.alpha_bar(2));
      auto im = [](const CForm& f) { return (Complex(1, 0) / Complex(0, 2)) * (f - conj(f)); };
      auto re = [](const CForm& f) { return Complex(0.5, 0) * (f + conj(f)); };
      CForm a23 = wedge(fr.alpha(1), fr.alpha(2));
      CForm a2b3 = wedge(fr.alpha(1), fr.alpha_bar(2));
      CForm F2 = Complex(-a * (e2 + e3) / (2 * e2 * e3 * A2 * A3), 0) * im(a23) +
                 Complex(a * (e2 - e3) / (2 * e2 * e3 * A2 * A3), 0) * im(a2b3);
      CForm F3 = Complex(a * (1 + e2 * e3) / (2 * e2 * e3 * A2 * A3), 0) * re(a23) +
                 Complex(a * (e2 * e3 - 1) / (2 * e2 * e3 * A2 * A3), 0) * re(a2b3);
      worst = std::max({worst, (F.c[0] - F1).max_abs_coeff(), (F.c[1] - F2).max_abs_coeff(),
                        (F.c[2] - F3).max_abs_coeff()});
    }
    results.push_back({"curvature-prop7", worst < tol, "max component error " + fmt_g(worst, 3)});
  }

  if (want("prop3-equivalence")) {
    bool ok = true;
    double worst_sol = 0.0;
    double best_nonsol = 1e9;
    for (int it = 0; it < 25; ++it) {
      StructureParams p(ua(rng), ua(rng), ua(rng), 1, 1, 1);
      for (RootId r : {RootId::R1, RootId::R2, RootId::R3}) {
        for (const auto& sol : solve_dt(r, p)) {
          InvariantConnection conn(root_weight(r), sol.a);
          HiggsPair h{sol.phi1, sol.phi2};
          auto raw = u_residual(conn, h, p);
          auto dt = dt_residual(conn, h, p);
          worst_sol = std::max({worst_sol, *raw.raw24_norm, *raw.raw25_norm, *dt.eq32_norm,
                                *dt.eq33_norm});
          // perturbed: both formulations must see it
          InvariantConnection bad(root_weight(r), sol.a + 0.1);
          auto rawb = u_residual(bad, h, p);
          auto dtb = dt_residual(bad, h, p);
          best_nonsol = std::min({best_nonsol, std::max(*rawb.raw24_norm, *rawb.raw25_norm),
                                  std::max(*dtb.eq32_norm, *dtb.eq33_norm)});
        }
      }
    }
    ok = worst_sol < tol && best_nonsol > 1e-3;
    results.push_back({"prop3-equivalence", ok,
                       "solutions: max residual " + fmt_g(worst_sol, 3) +
                           "; perturbed: min residual " + fmt_g(best_nonsol, 3)});
  }

  if (want("charclass")) {
    bool ok = true;
    std::string detail = "w2, p1 tables exact and pairwise distinct";
    try {
      auto r1 = char_classes(Weight{1, 2});
      auto r2 = char_classes(Weight{-2, -1});
      auto r3 = char_classes(Weight{1, -1});
      ok = r1.p1 == CohomologyClass4{Rational(-3), Rational(0)} &&
           r2.p1 == CohomologyClass4{Rational(0), Rational(-3)} &&
           r3.p1 == CohomologyClass4{Rational(3), Rational(3)} &&
           r1.w2 == std::array<int, 2>{1, 0} && r2.w2 == std::array<int, 2>{0, 1} &&
           r3.w2 == std::array<int, 2>{1, 1};
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    results.push_back({"charclass", ok, detail});
  }

  if (want("h4-primitive")) {
    bool ok = true;
    std::string detail = "exact primitive certificate";
    try {
      auto cert = verify_h4_relation();
      ok = cert.residual_zero && !solve_primitive(wedge(d_beta_exact(Weight{1, 0}),
                                                        d_beta_exact(Weight{1, 0})));
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    results.push_back({"h4-primitive", ok, detail});
  }

  return results;
}

int cmd_verify(double tol, const std::string& only, std::ostream& os) {
  auto results = run_verify(tol, only);
  if (results.empty()) {
    std::cerr << "no check matches --only '" << only << "'\n";
    return 2;
  }
  std::string first_fail;
  for (const auto& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " - " << r.detail << "\n";
    if (!r.pass && first_fail.empty()) first_fail = r.name;
  }
  if (!first_fail.empty()) {
    std::cerr << "first failing check: " << first_fail << "\n";
    return 1;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant gauge theory on the flag manifold SU(3)/T^2: structure "
               "classification, DT-instanton and pHYM solvers, parameter scans, "
               "characteristic classes"};
  app.require_subcommand(1);

  double tol = env_tolerance();
  double classify_tol = 1e-8;  // parameter-condition checks; coarser than the residual tolerance
  std::vector<std::string> params_raw;
  std::string mode = "dt", format = "csv", out_file, path_name = "example4", only, curve;
  double range_lo = 0.5, range_hi = 1.5;
  int nsamples = 101;
  std::vector<long> weight_kl;

  auto* c_classify = app.add_subcommand("classify", "classify the invariant structure");
  c_classify->add_option("--params", params_raw, "A1 A2 A3 eps1 eps2 eps3")->expected(6)->required();
  c_classify->add_option("--tolerance", classify_tol, "classification tolerance");

  auto* c_solve = app.add_subcommand("solve", "solve the instanton equations per root");
  c_solve->add_option("--params", params_raw, "A1 A2 A3 eps1 eps2 eps3")->expected(6)->required();
  c_solve->add_option("--mode", mode, "dt | phym");
  c_solve->add_option("--tolerance", tol, "residual tolerance");

  auto* c_scan = app.add_subcommand("scan", "scan a parameter path");
  c_scan->add_option("--path", path_name, "built-in path name (example4, example5, corollary4, nk)");
  c_scan->add_option("--curve", curve,
                     "explicit path: 6 colon-separated polynomials in s (comma-separated "
                     "coefficients, ascending degree) for A1:A2:A3:eps1:eps2:eps3");
  c_scan->add_option("--range", [&range_lo, &range_hi](const std::vector<std::string>& v) {
            range_lo = std::stod(v[0]);
            range_hi = std::stod(v[1]);
            return true;
          },
          "s range: LO HI")->expected(2);
  c_scan->add_option("--n", nsamples, "number of samples");
  c_scan->add_option("--mode", mode, "dt | phym");
  c_scan->add_option("--format", format, "csv | json | svg");
  c_scan->add_option("--out", out_file, "output file (default stdout)");
  c_scan->add_option("--tolerance", tol, "residual tolerance");

  auto* c_verify = app.add_subcommand("verify", "run the internal consistency suite");
  c_verify->add_option("--only", only, "run only checks whose name contains this string");
  c_verify->add_option("--tolerance", tol, "tolerance for float-route checks");

  auto* c_charclass = app.add_subcommand("charclass", "characteristic classes of P_beta / E_beta");
  c_charclass->add_option("--weight", weight_kl, "k l")->expected(2)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_classify->parsed()) return cmd_classify(parse_params(params_raw), classify_tol, std::cout);
    if (c_solve->parsed()) return cmd_solve(parse_params(params_raw), mode, tol, std::cout);
    if (c_scan->parsed())
      return cmd_scan(path_name, curve, range_lo, range_hi, nsamples, mode, format, out_file, tol,
                      std::cout);
    if (c_verify->parsed()) return cmd_verify(tol, only, std::cout);
    if (c_charclass->parsed()) return cmd_charclass(weight_kl[0], weight_kl[1], std::cout);
  } catch (const InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonSemibasic& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
