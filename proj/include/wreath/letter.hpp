#pragma once

#include <compare>
#include <string>

namespace wreath {

/// Total orders on signed letters. Both put every letter with a nonzero
/// exponent below 0 and every plain letter above it; they differ in how the
/// signed letters are ranked among themselves.
///
///   Standard:  z^{r-1}n < ... < z n < z^{r-1}(n-1) < ... < z 1 < 0 < 1 < ... < n
///   Alternate: z^{r-1}n < ... < z^{r-1}1 < z^{r-2}n < ... < z 1 < 0 < 1 < ... < n
enum class OrderVariant { Standard, Alternate };

const char* to_string(OrderVariant order) noexcept;

/// One symbol z^e s of the alphabet C_r x [n], or the boundary symbol 0.
/// The modulus is not stored: range checks against (r, n) belong to the
/// containing permutation.
class SignedLetter {
 public:
  /// The boundary symbol 0.
  constexpr SignedLetter() noexcept = default;

  /// The letter z^exponent value. Throws on value < 1 or exponent < 0.
  SignedLetter(int value, int exponent = 0);

  static constexpr SignedLetter zero() noexcept { return SignedLetter(); }

  constexpr bool is_zero() const noexcept { return value_ == 0; }
  constexpr int value() const noexcept { return value_; }
  constexpr int exponent() const noexcept { return exponent_; }
  constexpr bool is_signed() const noexcept { return exponent_ != 0; }

  friend constexpr bool operator==(SignedLetter, SignedLetter) noexcept = default;

 private:
  int value_ = 0;
  int exponent_ = 0;
};

std::strong_ordering compare(SignedLetter a, SignedLetter b,
                             OrderVariant order = OrderVariant::Standard) noexcept;

inline bool less(SignedLetter a, SignedLetter b,
                 OrderVariant order = OrderVariant::Standard) noexcept {
  return compare(a, b, order) < 0;
}

/// "0", "s" or "s^e".
std::string to_string(SignedLetter letter);

}  // namespace wreath
