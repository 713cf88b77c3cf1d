#include "wreath/algebra/series.hpp"

namespace wreath {

BivariatePolynomial coefficient_as_polynomial(const TruncatedSeries<RationalFunctionQ>& s, int k) {
  if (k < 0 || k > s.order()) {
    throw Error(ErrorKind::InvalidArgument, "coefficient index outside the truncation order");
  }
  const RationalFunctionQ scaled = s[k] * RationalFunctionQ(Rational(factorial(k)));
  if (!scaled.is_polynomial()) {
    throw Error(ErrorKind::NotPolynomial,
                "coefficient " + std::to_string(k) + " is not a polynomial: " + scaled.to_string());
  }
  // Denominator is the monic constant 1 here.
  return scaled.numerator().to_bivariate();
}

Integer coefficient_as_integer(const TruncatedSeries<Rational>& s, int k) {
  if (k < 0 || k > s.order()) {
    throw Error(ErrorKind::InvalidArgument, "coefficient index outside the truncation order");
  }
  const Rational scaled = s[k] * Rational(factorial(k));
  if (scaled.get_den() != 1) {
    throw Error(ErrorKind::NotPolynomial,
                "coefficient " + std::to_string(k) + " is not an integer: " + fraction_string(scaled));
  }
  return scaled.get_num();
}

nlohmann::json to_json(const TruncatedSeries<Rational>& s) {
  nlohmann::json out = nlohmann::json::array();
  for (int k = 0; k <= s.order(); ++k) out.push_back({{"k", k}, {"c", fraction_string(s[k])}});
  return out;
}

namespace {

nlohmann::json coefficient_list(const QPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& c : p.coefficients()) out.push_back(fraction_string(c));
  return out;
}

}  // namespace

nlohmann::json to_json(const TruncatedSeries<RationalFunctionQ>& s) {
  nlohmann::json out = nlohmann::json::array();
  for (int k = 0; k <= s.order(); ++k) {
    out.push_back({{"k", k},
                   {"num", coefficient_list(s[k].numerator())},
                   {"den", coefficient_list(s[k].denominator())}});
  }
  return out;
}

}  // namespace wreath
