#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wreath/algebra/integer.hpp"
#include "wreath/algebra/polynomial.hpp"

namespace wreath {

/// Dense univariate polynomial in q over the rationals, coefficients
/// ascending, no trailing zeros.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(const Rational& constant);  // NOLINT
  QPolynomial(int constant) : QPolynomial(Rational(constant)) {}  // NOLINT
  explicit QPolynomial(std::vector<Rational> coefficients);

  static QPolynomial q() { return QPolynomial(std::vector<Rational>{0, 1}); }
  /// Throws NotPolynomial if p involves t.
  static QPolynomial from(const BivariatePolynomial& p);

  /// -1 for zero.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  Rational coefficient(int i) const;
  Rational leading() const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial operator-() const;
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  QPolynomial scaled(const Rational& c) const;
  QPolynomial derivative() const;
  QPolynomial monic() const;
  Rational evaluate(const Rational& x) const;
  /// -1, 0 or +1.
  int sign_at(const Rational& x) const;

  /// Integer-coefficient conversion; throws NotPolynomial otherwise.
  BivariatePolynomial to_bivariate() const;

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

/// Euclidean division; throws DivisionByZero for a zero divisor.
std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
QPolynomial gcd(QPolynomial a, QPolynomial b);

}  // namespace wreath
