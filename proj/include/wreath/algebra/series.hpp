#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wreath/algebra/integer.hpp"
#include "wreath/algebra/rational_function.hpp"
#include "wreath/error.hpp"

namespace wreath {

inline constexpr int kDefaultSeriesOrder = 8;

/// Formal power series in x truncated after x^N, over an exact field
/// (Rational or RationalFunctionQ). Arithmetic never reads past x^N.
template <class Field>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = kDefaultSeriesOrder) : coefficients_(check(order) + 1, Field(0)) {}

  /// Missing high coefficients are zero; extra ones are an error.
  TruncatedSeries(int order, std::vector<Field> coefficients) : TruncatedSeries(order) {
    if (static_cast<int>(coefficients.size()) > order + 1) {
      throw Error(ErrorKind::InvalidArgument, "more coefficients than the truncation order allows");
    }
    for (std::size_t i = 0; i < coefficients.size(); ++i) coefficients_[i] = std::move(coefficients[i]);
  }

  static TruncatedSeries constant(const Field& c, int order) {
    TruncatedSeries s(order);
    s.coefficients_[0] = c;
    return s;
  }

  /// exp(c x): the n-th coefficient is c^n / n!.
  static TruncatedSeries exp_linear(const Field& c, int order) {
    TruncatedSeries s(order);
    Field term(1);
    for (int n = 0; n <= order; ++n) {
      if (n > 0) term = term * c * Field(Rational(1, n));
      s.coefficients_[n] = term;
    }
    return s;
  }

  int order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const Field& operator[](int k) const { return coefficients_.at(k); }
  const std::vector<Field>& coefficients() const noexcept { return coefficients_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(same_order(a, b));
    for (int k = 0; k <= out.order(); ++k) out.coefficients_[k] = a[k] + b[k];
    return out;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(same_order(a, b));
    for (int k = 0; k <= out.order(); ++k) out.coefficients_[k] = a[k] - b[k];
    return out;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(same_order(a, b));
    for (int k = 0; k <= out.order(); ++k) {
      Field acc(0);
      for (int i = 0; i <= k; ++i) acc = acc + a[i] * b[k - i];
      out.coefficients_[k] = acc;
    }
    return out;
  }

  /// a / b; b must have an invertible constant term.
  friend TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b[0] == Field(0)) {
      throw Error(ErrorKind::DivisionByZero, "series divisor has zero constant term");
    }
    TruncatedSeries out(same_order(a, b));
    for (int k = 0; k <= out.order(); ++k) {
      Field acc = a[k];
      for (int i = 1; i <= k; ++i) acc = acc - b[i] * out[k - i];
      out.coefficients_[k] = acc / b[0];
    }
    return out;
  }

  TruncatedSeries scaled(const Field& c) const {
    TruncatedSeries out(order());
    for (int k = 0; k <= order(); ++k) out.coefficients_[k] = coefficients_[k] * c;
    return out;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static int check(int order) {
    if (order < 0) throw Error(ErrorKind::InvalidArgument, "series order must be >= 0");
    return order;
  }

  static int same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
      throw Error(ErrorKind::InvalidArgument, "series truncation orders differ");
    }
    return a.order();
  }

  std::vector<Field> coefficients_;
};

/// k! [x^k] s, which must reduce to a polynomial in q with integer
/// coefficients. Anything else throws NotPolynomial.
BivariatePolynomial coefficient_as_polynomial(const TruncatedSeries<RationalFunctionQ>& s, int k);

/// k! [x^k] s, which must be an integer.
Integer coefficient_as_integer(const TruncatedSeries<Rational>& s, int k);

/// [{"k":0,"c":"p/q"}, ...]
nlohmann::json to_json(const TruncatedSeries<Rational>& s);
/// [{"k":0,"num":["p/q",...],"den":["p/q",...]}, ...], coefficient lists ascending in q.
nlohmann::json to_json(const TruncatedSeries<RationalFunctionQ>& s);

}  // namespace wreath
