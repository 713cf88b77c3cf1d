#include "wreath/cli/run_config.hpp"

#include <charconv>

#include "wreath/analysis.hpp"
#include "wreath/error.hpp"

namespace wreath::cli {

namespace {

int parse_int(std::string_view text, const std::string& whole) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::Parse, "malformed range '" + whole + "'");
  }
  return value;
}

}  // namespace

std::vector<int> IntRange::values() const {
  std::vector<int> out;
  for (int v = first; v <= last; ++v) out.push_back(v);
  return out;
}

IntRange parse_range(const std::string& text) {
  const std::string_view view(text);
  const std::size_t dots = view.find("..");
  IntRange range;
  if (dots == std::string_view::npos) {
    range.first = range.last = parse_int(view, text);
  } else {
    range.first = parse_int(view.substr(0, dots), text);
    range.last = parse_int(view.substr(dots + 2), text);
  }
  if (range.first > range.last) throw Error(ErrorKind::InvalidArgument, "empty range '" + text + "'");
  return range;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  if (text == "pretty") return OutputFormat::Pretty;
  throw Error(ErrorKind::Parse, "unknown format '" + text + "' (csv, json, pretty)");
}

OrderVariant parse_order(const std::string& text) {
  if (text == "standard") return OrderVariant::Standard;
  if (text == "alternate") return OrderVariant::Alternate;
  throw Error(ErrorKind::Parse, "unknown order '" + text + "' (standard, alternate)");
}

RunConfig::RunConfig() : tolerance(default_root_tolerance()) {}

void validate(const RunConfig& config) {
  if (config.r.first > config.r.last || config.n.first > config.n.last) {
    throw Error(ErrorKind::InvalidArgument, "ranges must be nonempty");
  }
  if (config.r.first < 1) throw Error(ErrorKind::InvalidArgument, "r must be >= 1");
  if (config.n.first < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
  if (config.series_order < 0) throw Error(ErrorKind::InvalidArgument, "series order must be >= 0");
  if (config.bound < 1) throw Error(ErrorKind::InvalidArgument, "enumeration bound must be >= 1");
  if (config.tolerance <= 0) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
}

}  // namespace wreath::cli
