#include "flagdt/report.hpp"

#include <cstdio>

namespace flagdt {

std::string format_double(double x, int digits) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

std::string scan_csv(const ScanTable& table) {
  std::string out = "s,root,mu,a_plus,a_minus,phi2,reducible\n";
  for (const auto& row : table.rows) {
    out += format_double(row.s, 10);
    out += ",";
    out += root_name(row.root);
    out += ",";
    if (!row.valid) {
      out += ",,,,invalid\n";
      continue;
    }
    out += format_double(row.mu);
    out += ",";
    if (row.has_solutions) {
      out += format_double(row.a_plus);
      out += ",";
      out += format_double(row.a_minus);
      out += ",";
      if (table.mode == SolveMode::DT) out += format_double(row.phi2);
      out += ",";
      out += row.reducible ? "1" : "0";
    } else {
      out += ",,,";
    }
    out += "\n";
  }
  return out;
}

std::string scan_svg(const ScanTable& table) {
  const double W = 640, H = 420, ml = 56, mr = 16, mt = 28, mb = 40;
  double amax = 0.0;
  for (const auto& r : table.rows)
    if (r.valid && r.has_solutions) amax = std::max(amax, std::abs(r.a_plus));
  if (amax == 0.0) amax = 1.0;
  amax *= 1.08;
  const double lo = table.path.lo, hi = table.path.hi;
  auto X = [&](double s) { return ml + (s - lo) / (hi - lo) * (W - ml - mr); };
  auto Y = [&](double a) { return mt + (amax - a) / (2 * amax) * (H - mt - mb); };
  auto g6 = [](double v) { return format_double(v, 6); };

  static const char* colors[3] = {"#1f77b4", "#d62728", "#2ca02c"};
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + g6(W) + "\" height=\"" + g6(H) +
         "\" viewBox=\"0 0 " + g6(W) + " " + g6(H) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<line x1=\"" + g6(ml) + "\" y1=\"" + g6(Y(0)) + "\" x2=\"" + g6(W - mr) + "\" y2=\"" +
         g6(Y(0)) + "\" stroke=\"#888\"/>\n";
  svg += "<line x1=\"" + g6(ml) + "\" y1=\"" + g6(mt) + "\" x2=\"" + g6(ml) + "\" y2=\"" +
         g6(H - mb) + "\" stroke=\"#888\"/>\n";
  svg += "<text x=\"" + g6(W / 2) + "\" y=\"" + g6(H - 8) +
         "\" text-anchor=\"middle\" font-size=\"13\">s</text>\n";
  svg += "<text x=\"14\" y=\"" + g6(H / 2) + "\" font-size=\"13\">a</text>\n";
  svg += "<text x=\"" + g6(ml) + "\" y=\"" + g6(H - mb + 16) +
         "\" text-anchor=\"middle\" font-size=\"11\">" + g6(lo) + "</text>\n";
  svg += "<text x=\"" + g6(W - mr) + "\" y=\"" + g6(H - mb + 16) +
         "\" text-anchor=\"middle\" font-size=\"11\">" + g6(hi) + "</text>\n";

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
        pts += format_double(X(row.s), 8) + "," + format_double(Y(a), 8) + " ";
        open = true;
      }
      flush();
    }
    svg += "<text x=\"" + g6(W - mr - 60) + "\" y=\"" + g6(mt + 16 * (rid + 1)) +
           "\" font-size=\"12\" fill=\"" + colors[rid] + "\">" +
           root_name(static_cast<RootId>(rid)) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

} // namespace flagdt
