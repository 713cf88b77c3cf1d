#pragma once

#include <stdexcept>
#include <string>

namespace wreath {

enum class ErrorKind {
  InvalidModulus,
  InvalidSize,
  WrongLength,
  ExponentOutOfRange,
  ValueOutOfRange,
  NotAPermutation,
  ZeroLetter,
  EnumerationBound,
  OverlappingAlphabets,
  AlphabetTooSmall,
  UnsupportedModulus,
  InvalidArgument,
  Parse,
  DivisionByZero,
  NotPolynomial,
  ZeroPolynomial,
  NotSquarefree,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers can branch
/// on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wreath
