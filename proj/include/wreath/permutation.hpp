#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wreath/letter.hpp"

namespace wreath {

class EnumerationCursor;

/// An element of C_r wr S_n in one-line notation: position i (1-based) holds
/// the signed letter z^{e_i} s_i. Immutable after construction.
class CyclicPermutation {
 public:
  /// Builds from (exponent, value) pairs. Rejects bad modulus, a sequence
  /// whose length is not n, exponents outside 0..r-1, and value words that
  /// are not a permutation of 1..n, each with its own ErrorKind.
  static CyclicPermutation make(int r, int n,
                                const std::vector<std::pair<int, int>>& letters);

  /// Same checks, with n taken from the word length.
  static CyclicPermutation from_letters(int r, std::vector<SignedLetter> letters);

  static CyclicPermutation identity(int r, int n);

  int modulus() const noexcept { return modulus_; }
  int size() const noexcept { return static_cast<int>(letters_.size()); }
  std::span<const SignedLetter> letters() const noexcept { return letters_; }

  /// Letter at 1-based position i.
  SignedLetter at(int position) const;

  friend bool operator==(const CyclicPermutation&, const CyclicPermutation&) = default;
  /// Lexicographic in (value word, exponent word), the enumeration order.
  friend std::strong_ordering operator<=>(const CyclicPermutation& a,
                                          const CyclicPermutation& b);

 private:
  friend class EnumerationCursor;

  CyclicPermutation(int r, std::vector<SignedLetter> letters)
      : modulus_(r), letters_(std::move(letters)) {}

  int modulus_ = 1;
  std::vector<SignedLetter> letters_;
};

/// sigma(z^a j) = z^{(a + e_j) mod r} s_j. Throws ZeroLetter on the boundary
/// symbol and ValueOutOfRange when j > n.
SignedLetter apply(const CyclicPermutation& sigma, SignedLetter x);

CyclicPermutation inverse(const CyclicPermutation& sigma);

/// Positions i with e_i = 0 and s_i = i, ascending.
std::vector<int> fixed_points(const CyclicPermutation& sigma);

bool is_derangement(const CyclicPermutation& sigma) noexcept;

/// Cycles of the underlying permutation i -> s_i. Each cycle starts at its
/// largest element; cycles are sorted by that leader.
std::vector<std::vector<int>> cycle_decomposition(const CyclicPermutation& sigma);

/// Canonical text: comma-separated letters, "s" or "s^e" with e >= 1.
std::string format(const CyclicPermutation& sigma);

/// Inverse of format. Non-canonical spellings ("2^0", spaces, leading zeros)
/// are rejected so that parse and format round-trip exactly.
CyclicPermutation parse_permutation(std::string_view text, int r);

}  // namespace wreath
