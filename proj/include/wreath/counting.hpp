#pragma once

#include <cstdint>
#include <vector>

#include "wreath/algebra/integer.hpp"
#include "wreath/algebra/polynomial.hpp"
#include "wreath/enumerate.hpp"
#include "wreath/letter.hpp"

namespace wreath {

/// Independent routes to the cyclic derangement numbers d_n^{(r)}.
enum class CountMethod { Formula, TwoTerm, OneTerm, Transform, BruteForce };

const char* to_string(CountMethod method) noexcept;

/// d_0 .. d_N for one modulus, produced by a single method.
struct CountTable {
  int modulus = 1;
  int max_size = 0;
  CountMethod method = CountMethod::Formula;
  std::vector<Integer> values;

  const Integer& operator[](int n) const { return values.at(n); }
};

CountTable count_table(int r, int max_n, CountMethod method,
                       std::uint64_t bound = kDefaultEnumerationBound);

/// r^n n! sum_i (-1)^i / (r^i i!), summed over the rationals and checked integral.
Integer d_formula(int r, int n);
/// d_n = (rn - 1) d_{n-1} + r(n-1) d_{n-2}, d_0 = 1, d_1 = r - 1.
Integer d_two_term(int r, int n);
/// d_n = rn d_{n-1} + (-1)^n, d_0 = 1.
Integer d_one_term(int r, int n);
/// sum_i C(n,i) r^i (r-1)^{n-i} d_i with d_i the derangement numbers of S_i.
/// Only defined for r >= 2; r = 1 throws UnsupportedModulus (use d_formula).
Integer d_mixed_transform(int r, int n);
/// Counts the enumeration.
Integer d_bruteforce(int r, int n, std::uint64_t bound = kDefaultEnumerationBound);

/// Elements of C_r wr S_n with exactly k fixed points: C(n,k) d_{n-k}.
Integer fixed_point_count(int r, int n, int k);

/// Rigorous rational check of |d_n / (r^n n!) - e^{-1/r}| < e / (r^{n+1} (n+1)!).
struct ProbabilityBound {
  Rational ratio;        // d_n / (r^n n!)
  Rational limit_lower;  // bracket around e^{-1/r}
  Rational limit_upper;
  Rational tolerance;    // e_lower / (r^{n+1} (n+1)!), e_lower < e
  bool holds = false;
};

ProbabilityBound probability_bound(int r, int n);

/// [r]_t^n [n]_q! sum_i (-1)^i q^{C(i,2)} / ([r]_t^i [i]_q!). The quotient
/// [n]_q!/[i]_q! is taken by exact division, so a failure to cancel throws.
BivariatePolynomial qt_formula(int r, int n);
/// ([r]_t [n]_q - q^{n-1}) d_{n-1} + q^{n-1} [r]_t [n-1]_q d_{n-2},
/// d_0 = 1, d_1 = [r]_t - 1.
BivariatePolynomial qt_two_term(int r, int n);
/// [r]_t [n]_q d_{n-1} + (-1)^n q^{C(n,2)}, d_0 = 1.
BivariatePolynomial qt_one_term(int r, int n);
/// sum over cyclic derangements of q^maj t^sgn.
BivariatePolynomial qt_bruteforce(int r, int n, OrderVariant order = OrderVariant::Standard,
                                  std::uint64_t bound = kDefaultEnumerationBound);

/// [r]_t^n [n]_q!.
BivariatePolynomial group_total_qt(int r, int n);
/// sum over all of C_r wr S_n of q^maj t^sgn.
BivariatePolynomial group_total_qt_bruteforce(int r, int n,
                                              OrderVariant order = OrderVariant::Standard,
                                              std::uint64_t bound = kDefaultEnumerationBound);

/// sum over derangements of S_n of q^maj, using plain integer permutations
/// and the classical descent definition.
BivariatePolynomial gessel_bruteforce(int n);

/// Joint distribution of (maj, sgn) over the group or its derangements, as
/// a polynomial in q (maj) and t (sgn).
BivariatePolynomial maj_sgn_distribution(int r, int n, bool derangements_only, OrderVariant order,
                                         std::uint64_t bound = kDefaultEnumerationBound);

enum class EulerianRoute { NonDescents, WeakExcedances };

/// sum over C_r wr S_n of q^{n - des} or of q^{exc}.
BivariatePolynomial eulerian_poly(int r, int n, EulerianRoute route,
                                  std::uint64_t bound = kDefaultEnumerationBound);

/// D_n^{(r)}(q) from D_n = (n-1)rq(D_{n-1} + D_{n-2}) + (r-1)D_{n-1} + rq(1-q)D'_{n-1},
/// D_0 = 1, D_1 = r - 1.
BivariatePolynomial exc_derangement_poly(int r, int n);
std::vector<BivariatePolynomial> exc_derangement_table(int r, int max_n);
/// sum over cyclic derangements of q^exc.
BivariatePolynomial exc_derangement_bruteforce(int r, int n,
                                               std::uint64_t bound = kDefaultEnumerationBound);

/// sum_k C(n,k) q^k D_{n-k}(q).
BivariatePolynomial eulerian_from_exc(int r, int n);

}  // namespace wreath
