#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreath/algebra/integer.hpp"
#include "wreath/enumerate.hpp"
#include "wreath/letter.hpp"

namespace wreath::cli {

/// Inclusive integer range written "a..b" or a single "a".
struct IntRange {
  int first = 0;
  int last = 0;

  std::vector<int> values() const;
};

/// Throws Error(Parse) on malformed text, Error(InvalidArgument) when
/// first > last.
IntRange parse_range(const std::string& text);

enum class OutputFormat { Csv, Json, Pretty };

OutputFormat parse_format(const std::string& text);
OrderVariant parse_order(const std::string& text);

struct RunConfig {
  std::string command;
  IntRange r{1, 3};
  IntRange n{0, 5};
  OrderVariant order = OrderVariant::Standard;
  int series_order = 8;
  OutputFormat format = OutputFormat::Pretty;
  std::uint64_t bound = kDefaultEnumerationBound;
  Rational tolerance;

  RunConfig();
};

/// Nonempty ranges, r >= 1, n >= 0, series order >= 0, bound >= 1, positive
/// tolerance. Throws Error(InvalidArgument).
void validate(const RunConfig& config);

/// Exit statuses shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

}  // namespace wreath::cli
