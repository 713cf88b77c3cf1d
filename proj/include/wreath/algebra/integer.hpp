#pragma once

#include <gmpxx.h>

#include <string>

namespace wreath {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(int n);
Integer binomial(int n, int k);
Integer power(const Integer& base, unsigned exponent);
Rational power(const Rational& base, unsigned exponent);

/// Always "p/q" with q >= 1, e.g. "5/2", "1/1", "-1/6".
std::string fraction_string(const Rational& x);

/// Accepts "p/q" or a plain integer; throws Error(Parse) otherwise.
Rational parse_rational(const std::string& text);

}  // namespace wreath
