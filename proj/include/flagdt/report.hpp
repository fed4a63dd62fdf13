#ifndef FLAGDT_REPORT_HPP
#define FLAGDT_REPORT_HPP

#include <string>

#include "flagdt/solver.hpp"

namespace flagdt {

/// Shortest round-trippable decimal form, "%.*g" with -0 normalized;
/// deterministic for identical inputs, which keeps scan outputs byte-stable.
std::string format_double(double x, int digits = 12);

/// Fixed-header CSV: s,root,mu,a_plus,a_minus,phi2,reducible. Rows without
/// solutions leave the last four fields empty; invalid samples read
/// "s,root,,,,,invalid"; phi2 is filled in DT mode only.
std::string scan_csv(const ScanTable& table);

/// Minimal static SVG: per-root colored a(s) polylines over labeled axes.
std::string scan_svg(const ScanTable& table);

} // namespace flagdt

#endif
