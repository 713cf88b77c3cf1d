#pragma once

#include <string>

#include "wreath/algebra/upolynomial.hpp"

namespace wreath {

/// Element of Q(q): numerator / denominator with gcd 1 and a monic
/// denominator. This is the coefficient field for the q-series whose
/// denominators have constant term 1 - q.
class RationalFunctionQ {
 public:
  RationalFunctionQ() : denominator_(1) {}
  RationalFunctionQ(const Rational& constant) : numerator_(constant), denominator_(1) {}  // NOLINT
  RationalFunctionQ(int constant) : RationalFunctionQ(Rational(constant)) {}  // NOLINT
  RationalFunctionQ(const QPolynomial& polynomial) : numerator_(polynomial), denominator_(1) {}  // NOLINT
  /// Throws DivisionByZero for a zero denominator.
  RationalFunctionQ(QPolynomial numerator, QPolynomial denominator);

  const QPolynomial& numerator() const noexcept { return numerator_; }
  const QPolynomial& denominator() const noexcept { return denominator_; }
  bool is_zero() const noexcept { return numerator_.is_zero(); }
  bool is_polynomial() const noexcept { return denominator_.degree() == 0; }

  RationalFunctionQ& operator+=(const RationalFunctionQ& other);
  RationalFunctionQ& operator-=(const RationalFunctionQ& other);
  RationalFunctionQ& operator*=(const RationalFunctionQ& other);
  RationalFunctionQ& operator/=(const RationalFunctionQ& other);
  RationalFunctionQ operator-() const;

  friend RationalFunctionQ operator+(RationalFunctionQ a, const RationalFunctionQ& b) { return a += b; }
  friend RationalFunctionQ operator-(RationalFunctionQ a, const RationalFunctionQ& b) { return a -= b; }
  friend RationalFunctionQ operator*(RationalFunctionQ a, const RationalFunctionQ& b) { return a *= b; }
  friend RationalFunctionQ operator/(RationalFunctionQ a, const RationalFunctionQ& b) { return a /= b; }
  friend bool operator==(const RationalFunctionQ&, const RationalFunctionQ&) = default;

  std::string to_string() const;

 private:
  void normalize();

  QPolynomial numerator_;
  QPolynomial denominator_;
};

}  // namespace wreath
