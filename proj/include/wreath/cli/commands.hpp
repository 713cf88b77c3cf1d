#pragma once

#include <ostream>
#include <string>

#include "wreath/cli/run_config.hpp"
#include "wreath/counting.hpp"

namespace wreath::cli {

struct TableOptions {
  CountMethod method = CountMethod::Formula;
  bool compare_published = false;
};

CountMethod parse_method(const std::string& text);

/// d_n^{(r)} grid over the configured ranges. Cells a method cannot produce
/// (enumeration over the bound, the mixed transform at r = 1) print as
/// "refused" or "n/a" instead of aborting.
int cmd_table(const RunConfig& config, const TableOptions& options, std::ostream& out);

enum class PolyKind { QtDerangement, Eulerian, ExcDerangement };
PolyKind parse_poly_kind(const std::string& text);

int cmd_poly(const RunConfig& config, PolyKind kind, std::ostream& out);

/// Root report for D_n^{(r)}(q) and interlacing with D_{n+1}^{(r)}(q) on
/// every cell with n >= 2. Exit 1 if any cell fails.
int cmd_roots(const RunConfig& config, std::ostream& out);

/// One line (or JSON object) per element with its statistics.
int cmd_enumerate(const RunConfig& config, bool derangements_only, std::ostream& out);

enum class SeriesKind { Derangement, Eulerian, ExcDerangement };
SeriesKind parse_series_kind(const std::string& text);

/// n! [x^n] of the chosen EGF for n = 0..series order, per r.
int cmd_series(const RunConfig& config, SeriesKind kind, std::ostream& out);

}  // namespace wreath::cli
