#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wreath/algebra/integer.hpp"

namespace wreath {

/// Polynomial in q and t with integer coefficients, stored sparsely by
/// (q-degree, t-degree). Zero coefficients are never stored, so equality is
/// structural.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Integer>;

  BivariatePolynomial() = default;
  BivariatePolynomial(const Integer& constant);  // NOLINT: implicit on purpose
  BivariatePolynomial(long constant) : BivariatePolynomial(Integer(constant)) {}  // NOLINT
  BivariatePolynomial(int constant) : BivariatePolynomial(Integer(constant)) {}  // NOLINT

  static BivariatePolynomial monomial(int q_degree, int t_degree, const Integer& c = 1);
  static BivariatePolynomial q() { return monomial(1, 0); }
  static BivariatePolynomial t() { return monomial(0, 1); }
  /// From ascending q-coefficients.
  static BivariatePolynomial from_q_coefficients(const std::vector<Integer>& coefficients);

  const Terms& terms() const noexcept { return terms_; }
  Integer coefficient(int q_degree, int t_degree = 0) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int q_degree() const noexcept;
  int t_degree() const noexcept;
  /// Smallest q-degree with a nonzero term; -1 for zero.
  int q_valuation() const noexcept;
  bool is_q_only() const noexcept;

  /// Ascending q-coefficients; throws NotPolynomial if any t appears.
  std::vector<Integer> q_coefficients() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  BivariatePolynomial& operator-=(const BivariatePolynomial& other);
  BivariatePolynomial& operator*=(const BivariatePolynomial& other);
  BivariatePolynomial operator-() const;

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  BivariatePolynomial derivative_q() const;
  Rational evaluate(const Rational& q, const Rational& t) const;
  /// Substitutes t = 1, leaving a polynomial in q.
  BivariatePolynomial at_t_one() const;

  /// e.g. "8q^2 + 20q + 1", "qt^2 + qt + q + t^2 + t", "0". Terms in
  /// decreasing (q, t) order.
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Integer& c);

  Terms terms_;
};

BivariatePolynomial pow(const BivariatePolynomial& base, unsigned exponent);

/// True when q^n p(1/q) = p(q); p must be free of t and of degree <= n.
bool reciprocal_check(const BivariatePolynomial& p, int n);

/// Symmetric coefficient sequence between the lowest and highest q-degree
/// (q^{lo+hi} p(1/q) = p). The zero polynomial counts as palindromic.
bool is_palindromic(const BivariatePolynomial& p);

/// [{"q":i,"t":j,"c":"decimal"}, ...] ascending by (q, t).
nlohmann::json to_json(const BivariatePolynomial& p);
BivariatePolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace wreath
