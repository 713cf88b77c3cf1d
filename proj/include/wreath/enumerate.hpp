#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "wreath/algebra/integer.hpp"
#include "wreath/error.hpp"
#include "wreath/permutation.hpp"

namespace wreath {

inline constexpr std::uint64_t kDefaultEnumerationBound = 10'000'000;

/// r^n n!.
Integer group_order(int r, int n);

/// Raised when an enumeration would exceed its cardinality bound.
class EnumerationRefused : public Error {
 public:
  EnumerationRefused(const Integer& cardinality, std::uint64_t bound);

  const Integer& cardinality() const noexcept { return cardinality_; }
  std::uint64_t bound() const noexcept { return bound_; }

 private:
  Integer cardinality_;
  std::uint64_t bound_;
};

/// Walks C_r wr S_n in lexicographic (value word, exponent word) order,
/// optionally skipping elements with fixed points.
class EnumerationCursor {
 public:
  EnumerationCursor(int r, int n, bool derangements_only);

  bool done() const noexcept { return done_; }
  const CyclicPermutation& current() const noexcept { return current_; }
  void advance();

 private:
  void step();
  bool accepted() const noexcept;

  CyclicPermutation current_;
  std::vector<int> values_;
  std::vector<int> exponents_;
  bool derangements_only_;
  bool done_ = false;
};

/// Lazy, single-pass range over group elements.
class EnumerationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = CyclicPermutation;
    using difference_type = std::ptrdiff_t;
    using reference = const CyclicPermutation&;
    using pointer = const CyclicPermutation*;

    iterator() = default;
    explicit iterator(EnumerationCursor* cursor) : cursor_(cursor) {}

    reference operator*() const { return cursor_->current(); }
    pointer operator->() const { return &cursor_->current(); }
    iterator& operator++() {
      cursor_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.cursor_ == nullptr || it.cursor_->done();
    }

   private:
    EnumerationCursor* cursor_ = nullptr;
  };

  EnumerationRange(int r, int n, bool derangements_only) : cursor_(r, n, derangements_only) {}

  iterator begin() { return iterator(&cursor_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  EnumerationCursor cursor_;
};

/// Every element of C_r wr S_n exactly once. Refuses (EnumerationRefused)
/// when r^n n! exceeds the bound.
EnumerationRange enumerate_group(int r, int n, std::uint64_t bound = kDefaultEnumerationBound);

/// The cyclic derangements of C_r wr S_n, same order and bound.
EnumerationRange enumerate_derangements(int r, int n,
                                        std::uint64_t bound = kDefaultEnumerationBound);

/// Bound from the WREATH_ENUM_BOUND environment variable, or the default.
std::uint64_t enumeration_bound_from_env();

}  // namespace wreath
