#include "wreath/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace wreath {

Integer group_order(int r, int n) {
  if (r < 1) throw Error(ErrorKind::InvalidModulus, "modulus r must be >= 1");
  if (n < 0) throw Error(ErrorKind::InvalidSize, "size n must be >= 0");
  return power(Integer(r), static_cast<unsigned>(n)) * factorial(n);
}

EnumerationRefused::EnumerationRefused(const Integer& cardinality, std::uint64_t bound)
    : Error(ErrorKind::EnumerationBound,
            "refusing to enumerate " + cardinality.get_str() + " elements (bound " +
                std::to_string(bound) + ")"),
      cardinality_(cardinality),
      bound_(bound) {}

EnumerationCursor::EnumerationCursor(int r, int n, bool derangements_only)
    : current_(CyclicPermutation::identity(r, n)),
      values_(n),
      exponents_(n, 0),
      derangements_only_(derangements_only) {
  std::iota(values_.begin(), values_.end(), 1);
  if (!accepted()) advance();
}

bool EnumerationCursor::accepted() const noexcept {
  return !derangements_only_ || is_derangement(current_);
}

void EnumerationCursor::step() {
  const int n = static_cast<int>(values_.size());
  const int r = current_.modulus();
  // Exponent word is the fast odometer; the value word moves when it wraps.
  int i = n - 1;
  while (i >= 0 && exponents_[i] == r - 1) {
    exponents_[i] = 0;
    --i;
  }
  if (i >= 0) {
    ++exponents_[i];
  } else if (!std::next_permutation(values_.begin(), values_.end())) {
    done_ = true;
    return;
  }
  for (int k = 0; k < n; ++k) current_.letters_[k] = SignedLetter(values_[k], exponents_[k]);
}

void EnumerationCursor::advance() {
  if (done_) return;
  do {
    step();
  } while (!done_ && !accepted());
}

namespace {

void check_bound(int r, int n, std::uint64_t bound) {
  if (r < 1) throw Error(ErrorKind::InvalidModulus, "modulus r must be >= 1");
  if (n < 0) throw Error(ErrorKind::InvalidSize, "size n must be >= 0");
  const Integer order = group_order(r, n);
  if (order > Integer(std::to_string(bound))) throw EnumerationRefused(order, bound);
}

}  // namespace

EnumerationRange enumerate_group(int r, int n, std::uint64_t bound) {
  check_bound(r, n, bound);
  return EnumerationRange(r, n, false);
}

EnumerationRange enumerate_derangements(int r, int n, std::uint64_t bound) {
  check_bound(r, n, bound);
  return EnumerationRange(r, n, true);
}

std::uint64_t enumeration_bound_from_env() {
  const char* raw = std::getenv("WREATH_ENUM_BOUND");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationBound;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw Error(ErrorKind::InvalidArgument,
                std::string("WREATH_ENUM_BOUND must be a positive integer, got \"") + raw + "\"");
  }
  return value;
}

}  // namespace wreath
