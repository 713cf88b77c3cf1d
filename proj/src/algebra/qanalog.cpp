#include "wreath/algebra/qanalog.hpp"

#include <vector>

#include "wreath/algebra/upolynomial.hpp"
#include "wreath/error.hpp"

namespace wreath {

namespace {

void require_nonnegative(int x, const char* name) {
  if (x < 0) throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be nonnegative");
}

BivariatePolynomial exact_quotient(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  auto [quotient, remainder] = divmod(QPolynomial::from(a), QPolynomial::from(b));
  if (!remainder.is_zero()) {
    throw Error(ErrorKind::NotPolynomial, "division leaves remainder " + remainder.to_string());
  }
  return quotient.to_bivariate();
}

}  // namespace

BivariatePolynomial q_integer(int i) {
  require_nonnegative(i, "i");
  BivariatePolynomial out;
  for (int k = 0; k < i; ++k) out += BivariatePolynomial::monomial(k, 0);
  return out;
}

BivariatePolynomial q_factorial(int n) {
  require_nonnegative(n, "n");
  BivariatePolynomial out = 1;
  for (int i = 2; i <= n; ++i) out *= q_integer(i);
  return out;
}

BivariatePolynomial q_binomial(int m, int k) {
  require_nonnegative(m, "m");
  require_nonnegative(k, "k");
  if (k > m) throw Error(ErrorKind::InvalidArgument, "q_binomial needs k <= m");
  // row[j] holds [i, j] while i runs up to m.
  std::vector<BivariatePolynomial> row(k + 1);
  row[0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] = row[j - 1] + BivariatePolynomial::monomial(j, 0) * row[j];
    }
  }
  return row[k];
}

BivariatePolynomial q_binomial_by_division(int m, int k) {
  require_nonnegative(m, "m");
  require_nonnegative(k, "k");
  if (k > m) throw Error(ErrorKind::InvalidArgument, "q_binomial needs k <= m");
  return exact_quotient(q_factorial(m), q_factorial(k) * q_factorial(m - k));
}

BivariatePolynomial q_factorial_ratio(int n, int i) {
  require_nonnegative(i, "i");
  if (i > n) throw Error(ErrorKind::InvalidArgument, "q_factorial_ratio needs i <= n");
  return exact_quotient(q_factorial(n), q_factorial(i));
}

BivariatePolynomial t_bracket(int r) {
  require_nonnegative(r, "r");
  BivariatePolynomial out;
  for (int k = 0; k < r; ++k) out += BivariatePolynomial::monomial(0, k);
  return out;
}

}  // namespace wreath
