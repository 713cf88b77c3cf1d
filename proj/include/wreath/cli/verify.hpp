#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wreath/cli/run_config.hpp"
#include "wreath/published_table.hpp"

namespace wreath::cli {

enum class Suite { All, Counts, Qt, Bijections, Eulerian, Egf, Roots };
Suite parse_suite(const std::string& text);
const char* to_string(Suite suite) noexcept;

/// Discrepancy is a printed table value that differs from a count every
/// computation route agrees on; it is reported but does not fail the run.
/// Skipped means brute force was refused by the enumeration bound.
enum class CheckStatus { Pass, Fail, Skipped, Discrepancy };
const char* to_string(CheckStatus status) noexcept;

struct CheckResult {
  std::string suite;
  std::string identity;
  std::string statement;
  int r = 0;
  int n = 0;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  /// Sorted by (suite, r, n, identity).
  std::vector<CheckResult> checks;
  std::vector<TableDiscrepancy> discrepancies;

  bool passed() const noexcept;
};

VerifyReport run_verify(const RunConfig& config, Suite suite);

/// {"schema": 1, "suite", "pass", "summary": {...}, "checks": [...],
///  "discrepancies": [...]}
nlohmann::json to_json(const VerifyReport& report);

/// Prints the report in the configured format; exit 0 iff every check passed.
int cmd_verify(const RunConfig& config, Suite suite, std::ostream& out);

}  // namespace wreath::cli
