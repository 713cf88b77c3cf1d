#pragma once

#include "wreath/algebra/polynomial.hpp"

namespace wreath {

/// [i]_q = 1 + q + ... + q^{i-1}; [0]_q = 0.
BivariatePolynomial q_integer(int i);

/// [n]_q! = [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1.
BivariatePolynomial q_factorial(int n);

/// Gaussian binomial by the Pascal-type recurrence
/// [m, k] = [m-1, k-1] + q^k [m-1, k]. Throws InvalidArgument for k > m.
BivariatePolynomial q_binomial(int m, int k);

/// The same coefficient via [m]_q! / ([k]_q! [m-k]_q!) with exact
/// polynomial division; a nonzero remainder throws NotPolynomial.
BivariatePolynomial q_binomial_by_division(int m, int k);

/// [n]_q! / [i]_q! for i <= n by exact division.
BivariatePolynomial q_factorial_ratio(int n, int i);

/// [r]_t = 1 + t + ... + t^{r-1}.
BivariatePolynomial t_bracket(int r);

}  // namespace wreath
