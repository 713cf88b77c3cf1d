#include <gtest/gtest.h>

#include "oracle.hpp"
#include "wreath/algebra/integer.hpp"
#include "wreath/algebra/polynomial.hpp"
#include "wreath/algebra/qanalog.hpp"
#include "wreath/algebra/rational_function.hpp"
#include "wreath/algebra/series.hpp"
#include "wreath/algebra/upolynomial.hpp"
#include "wreath/error.hpp"

using namespace wreath;

namespace {

const BivariatePolynomial q = BivariatePolynomial::q();
const BivariatePolynomial t = BivariatePolynomial::t();

BivariatePolynomial qpoly(std::vector<Integer> c) { return BivariatePolynomial::from_q_coefficients(c); }

}  // namespace

TEST(Integer, Helpers) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(20).get_str(), "2432902008176640000");
  EXPECT_EQ(binomial(7, 3), 35);
  EXPECT_EQ(binomial(3, 7), 0);
  EXPECT_EQ(power(Integer(3), 40).get_str(), "12157665459056928801");
  EXPECT_EQ(power(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(fraction_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(fraction_string(Rational(5)), "5/1");
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Polynomial, CanonicalFormAndText) {
  EXPECT_TRUE((q - q).is_zero());
  EXPECT_TRUE((q - q).terms().empty());
  EXPECT_EQ((q - q).to_string(), "0");
  EXPECT_EQ((q - q).q_degree(), -1);
  EXPECT_EQ(qpoly({1, 20, 8}).to_string(), "8q^2 + 20q + 1");
  EXPECT_EQ((q + t + q * t + t * t + q * t * t).to_string(), "qt^2 + qt + q + t^2 + t");
  EXPECT_EQ((-q * q + 3 - t).to_string(), "-q^2 - t + 3");
  EXPECT_EQ(BivariatePolynomial(Integer(-1)).to_string(), "-1");
}

TEST(Polynomial, Accessors) {
  const BivariatePolynomial p = 3 * q * q * t + 2 * q + 5;
  EXPECT_EQ(p.coefficient(2, 1), 3);
  EXPECT_EQ(p.coefficient(2, 0), 0);
  EXPECT_EQ(p.q_degree(), 2);
  EXPECT_EQ(p.t_degree(), 1);
  EXPECT_EQ(p.q_valuation(), 0);
  EXPECT_EQ((q * q + q * q * q).q_valuation(), 2);
  EXPECT_FALSE(p.is_q_only());
  EXPECT_THROW(p.q_coefficients(), Error);
  EXPECT_EQ(qpoly({1, 0, 2}).q_coefficients(), (std::vector<Integer>{1, 0, 2}));
}

TEST(Polynomial, DerivativeAndEvaluation) {
  EXPECT_EQ((q * q).derivative_q(), 2 * q);
  EXPECT_EQ((q * q * t + t).derivative_q(), 2 * q * t);
  EXPECT_TRUE(BivariatePolynomial(7).derivative_q().is_zero());
  const BivariatePolynomial p = q + t + q * t + t * t + q * t * t;
  EXPECT_EQ(p.evaluate(1, 1), 5);
  EXPECT_EQ(p.evaluate(Rational(1, 2), 2), Rational(1, 2) + 2 + 1 + 4 + 2);
  EXPECT_EQ(p.at_t_one(), 3 * q + 2);
}

TEST(Polynomial, ReciprocalCheck) {
  EXPECT_TRUE(reciprocal_check(1 + q, 1));
  EXPECT_FALSE(reciprocal_check(2 + q, 1));
  EXPECT_TRUE(reciprocal_check(qpoly({1, 6, 1}), 2));
  EXPECT_FALSE(reciprocal_check(q + q * q, 2));
  EXPECT_TRUE(reciprocal_check(q + q * q, 3));
  EXPECT_TRUE(is_palindromic(q + q * q));
  EXPECT_TRUE(is_palindromic(qpoly({1, 4, 1})));
  EXPECT_FALSE(is_palindromic(qpoly({4, 13, 1})));
  EXPECT_TRUE(is_palindromic(BivariatePolynomial(1)));
}

TEST(Polynomial, Json) {
  const BivariatePolynomial p = 3 * q * t - 12;
  const nlohmann::json j = to_json(p);
  EXPECT_EQ(j, nlohmann::json::parse(R"([{"q":0,"t":0,"c":"-12"},{"q":1,"t":1,"c":"3"}])"));
  EXPECT_EQ(polynomial_from_json(j), p);
  const BivariatePolynomial big = BivariatePolynomial::monomial(3, 0, power(Integer(10), 30));
  EXPECT_EQ(polynomial_from_json(to_json(big)), big);
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(R"([{"q":0,"t":0,"c":"x"}])")), Error);
}

TEST(Polynomial, Power) {
  EXPECT_EQ(pow(1 + t, 3), 1 + 3 * t + 3 * t * t + t * t * t);
  EXPECT_EQ(pow(q, 0), 1);
}

TEST(QAnalog, Examples) {
  EXPECT_EQ(q_integer(3), 1 + q + q * q);
  EXPECT_TRUE(q_integer(0).is_zero());
  EXPECT_EQ(q_factorial(0), 1);
  EXPECT_EQ(q_binomial(4, 2), 1 + q + 2 * q * q + q * q * q + q * q * q * q);
  EXPECT_EQ(t_bracket(3), 1 + t + t * t);
  EXPECT_THROW(q_binomial(2, 3), Error);
}

TEST(QAnalog, AgreeWithOracles) {
  for (int m = 0; m <= 9; ++m) {
    EXPECT_EQ(q_factorial(m), oracle::q_factorial(m));
    for (int k = 0; k <= m; ++k) {
      EXPECT_EQ(q_binomial(m, k), oracle::gaussian(m, k));
      EXPECT_EQ(q_binomial(m, k), q_binomial_by_division(m, k));
      EXPECT_EQ(q_binomial(m, k), q_binomial(m, m - k));
      EXPECT_EQ(q_binomial(m, k).evaluate(1, 1), Rational(binomial(m, k)));
      EXPECT_EQ(q_factorial_ratio(m, k) * q_factorial(k), q_factorial(m));
    }
  }
}

TEST(QPolynomial, DivisionAndGcd) {
  const QPolynomial x = QPolynomial::q();
  const QPolynomial a = (x + 1) * (x + 1) * (x - 2);
  const auto [quotient, remainder] = divmod(a, x + 1);
  EXPECT_EQ(quotient, (x + 1) * (x - 2));
  EXPECT_TRUE(remainder.is_zero());
  EXPECT_EQ(gcd(a, a.derivative()), x + 1);
  EXPECT_EQ(gcd(x * 2 + 1, x), QPolynomial(1));
  EXPECT_TRUE(gcd(QPolynomial(), QPolynomial()).is_zero());
  EXPECT_THROW(divmod(a, QPolynomial()), Error);
  EXPECT_EQ(a.evaluate(2), 0);
  EXPECT_EQ(a.sign_at(3), 1);
  EXPECT_EQ(a.sign_at(0), -1);
  EXPECT_EQ((x.scaled(Rational(1, 2)) + 1).to_string(), "1/2q + 1");
  EXPECT_THROW(x.scaled(Rational(1, 2)).to_bivariate(), Error);
  EXPECT_EQ(QPolynomial::from(BivariatePolynomial::q() * 4 + 1).to_bivariate().to_string(), "4q + 1");
  EXPECT_THROW(QPolynomial::from(BivariatePolynomial::t()), Error);
}

TEST(RationalFunction, Normalization) {
  const QPolynomial x = QPolynomial::q();
  const RationalFunctionQ f((x - 1) * (x + 2), (x - 1).scaled(3));
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f, RationalFunctionQ((x + 2).scaled(Rational(1, 3))));
  const RationalFunctionQ g(QPolynomial(1), x.scaled(2) - 2);
  EXPECT_EQ(g.denominator(), x - 1);
  EXPECT_EQ(g.numerator(), QPolynomial(Rational(1, 2)));
  EXPECT_EQ(g * RationalFunctionQ(x - 1), RationalFunctionQ(Rational(1, 2)));
  EXPECT_EQ(g - g, RationalFunctionQ(0));
  EXPECT_THROW(g / RationalFunctionQ(0), Error);
  EXPECT_THROW(RationalFunctionQ(x, QPolynomial()), Error);
  EXPECT_EQ(g.to_string(), "(1/2)/(q - 1)");
}

TEST(Series, Examples) {
  using Series = TruncatedSeries<Rational>;
  const Series e = Series::exp_linear(-1, 3);
  EXPECT_EQ(e.coefficients(), (std::vector<Rational>{1, -1, Rational(1, 2), Rational(-1, 6)}));
  const Series quotient = divide(Series::exp_linear(-1, 4), Series(4, {1, -2}));
  EXPECT_EQ(quotient[2], Rational(5, 2));
  EXPECT_EQ(coefficient_as_integer(quotient, 2), 5);
  const Series any(4, {3, Rational(1, 7), 0, -2});
  EXPECT_EQ(Series::constant(1, 4) * any, any);
  EXPECT_THROW(divide(any, Series(4, {0, 1})), Error);
  EXPECT_THROW(any + Series(3), Error);
  EXPECT_THROW(Series(1, {1, 2, 3}), Error);
  EXPECT_THROW(coefficient_as_integer(Series(2, {0, Rational(1, 3)}), 1), Error);
  EXPECT_EQ(to_json(Series(1, {Rational(1, 2), -3})),
            nlohmann::json::parse(R"([{"k":0,"c":"1/2"},{"k":1,"c":"-3/1"}])"));
}

TEST(Series, RationalFunctionCoefficients) {
  using QSeries = TruncatedSeries<RationalFunctionQ>;
  const QPolynomial x = QPolynomial::q();
  const QSeries s(2, {RationalFunctionQ(1), RationalFunctionQ(x + 1), RationalFunctionQ(QPolynomial(1), x - 1)});
  EXPECT_EQ(coefficient_as_polynomial(s, 1).to_string(), "q + 1");
  EXPECT_THROW(coefficient_as_polynomial(s, 2), Error);
  const QSeries h(1, {RationalFunctionQ(x.scaled(Rational(1, 2)))});
  EXPECT_THROW(coefficient_as_polynomial(h, 0), Error);
  const nlohmann::json j = to_json(s);
  EXPECT_EQ(j[2]["den"], nlohmann::json::parse(R"(["-1/1","1/1"])"));
}
