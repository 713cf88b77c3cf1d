#include "wreath/letter.hpp"

#include <tuple>

#include "wreath/error.hpp"

namespace wreath {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidModulus: return "invalid-modulus";
    case ErrorKind::InvalidSize: return "invalid-size";
    case ErrorKind::WrongLength: return "wrong-length";
    case ErrorKind::ExponentOutOfRange: return "exponent-out-of-range";
    case ErrorKind::ValueOutOfRange: return "value-out-of-range";
    case ErrorKind::NotAPermutation: return "not-a-permutation";
    case ErrorKind::ZeroLetter: return "zero-letter";
    case ErrorKind::EnumerationBound: return "enumeration-bound";
    case ErrorKind::OverlappingAlphabets: return "overlapping-alphabets";
    case ErrorKind::AlphabetTooSmall: return "alphabet-too-small";
    case ErrorKind::UnsupportedModulus: return "unsupported-modulus";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::NotPolynomial: return "not-polynomial";
    case ErrorKind::ZeroPolynomial: return "zero-polynomial";
    case ErrorKind::NotSquarefree: return "not-squarefree";
  }
  return "unknown";
}

const char* to_string(OrderVariant order) noexcept {
  return order == OrderVariant::Standard ? "standard" : "alternate";
}

SignedLetter::SignedLetter(int value, int exponent) : value_(value), exponent_(exponent) {
  if (value < 1) {
    throw Error(ErrorKind::ValueOutOfRange,
                "letter value must be at least 1, got " + std::to_string(value));
  }
  if (exponent < 0) {
    throw Error(ErrorKind::ExponentOutOfRange,
                "letter exponent must be nonnegative, got " + std::to_string(exponent));
  }
}

namespace {

// Rank tuple: (block, major, minor). Block 0 holds signed letters, block 1
// the boundary 0, block 2 the plain letters.
std::tuple<int, int, int> rank(SignedLetter x, OrderVariant order) noexcept {
  if (x.is_zero()) return {1, 0, 0};
  if (!x.is_signed()) return {2, x.value(), 0};
  if (order == OrderVariant::Standard) return {0, -x.value(), -x.exponent()};
  return {0, -x.exponent(), -x.value()};
}

}  // namespace

std::strong_ordering compare(SignedLetter a, SignedLetter b, OrderVariant order) noexcept {
  return rank(a, order) <=> rank(b, order);
}

std::string to_string(SignedLetter letter) {
  if (letter.is_zero()) return "0";
  std::string out = std::to_string(letter.value());
  if (letter.is_signed()) out += "^" + std::to_string(letter.exponent());
  return out;
}

}  // namespace wreath
