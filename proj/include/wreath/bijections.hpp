#pragma once

#include <cstdint>
#include <string>

#include "wreath/enumerate.hpp"

namespace wreath {

/// Exhaustive check over C_r wr S_n of the fixed-point reduction: every
/// fiber {sigma : dp(sigma) = alpha} has C(n, k) elements, fibers over
/// derangements of size n-k number d_{n-k}, and phi maps each fiber
/// bijectively onto the shuffles of phi(alpha) with the increasing run
/// sub(alpha)+1, ..., sub(alpha)+k, keeping descent sets and sgn.
struct FiberReport {
  std::uint64_t elements = 0;
  std::uint64_t fibers = 0;
  std::uint64_t size_mismatches = 0;
  std::uint64_t fiber_count_mismatches = 0;
  std::uint64_t not_bijective = 0;
  std::uint64_t descent_mismatches = 0;
  std::uint64_t sgn_mismatches = 0;
  /// r^n n! = sum_k C(n, k) d_{n-k}.
  bool total_matches = false;
  /// First failure, for reports.
  std::string example;

  bool passed() const noexcept;
};

FiberReport check_fibers(int r, int n, std::uint64_t bound = kDefaultEnumerationBound);

/// For every pair of words alpha, beta of signed letters (exponents below r)
/// whose values partition {1, ..., total}, the maj/sgn generating function
/// over their shuffles equals [total choose a]_q q^{maj alpha + maj beta}
/// t^{sgn alpha + sgn beta}. Refuses (EnumerationRefused) when the number of
/// shuffled words, total! r^total 2^total, exceeds the bound.
struct ShuffleReport {
  std::uint64_t pairs = 0;
  std::uint64_t words = 0;
  std::uint64_t failures = 0;
  std::string example;

  bool passed() const noexcept { return failures == 0; }
};

ShuffleReport check_shuffle_identity(int r, int total, std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace wreath
