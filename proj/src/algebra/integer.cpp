#include "wreath/algebra/integer.hpp"

#include "wreath/error.hpp"

namespace wreath {

Integer factorial(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer power(const Integer& base, unsigned exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational power(const Rational& base, unsigned exponent) {
  Rational out(power(base.get_num(), exponent), power(base.get_den(), exponent));
  out.canonicalize();
  return out;
}

std::string fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational out;
  if (text.empty() || out.set_str(text, 10) != 0 || out.get_den() == 0) {
    throw Error(ErrorKind::Parse, "not a rational number: \"" + text + "\"");
  }
  out.canonicalize();
  return out;
}

}  // namespace wreath
