#pragma once

#include <string>
#include <vector>

#include "wreath/algebra/polynomial.hpp"
#include "wreath/algebra/series.hpp"

namespace wreath {

/// e^{-x} / (1 - r x).
TruncatedSeries<Rational> derangement_egf(int r, int order = kDefaultSeriesOrder);

/// (1 - q) e^{x(1-q)} / (1 - q e^{r x (1-q)}), the closed form offered for
/// the cyclic Eulerian polynomials.
TruncatedSeries<RationalFunctionQ> eulerian_egf(int r, int order = kDefaultSeriesOrder);

/// (1 - q) e^{x(r-1)} / (e^{q r x} - q e^{r x}).
TruncatedSeries<RationalFunctionQ> exc_derangement_egf(int r, int order = kDefaultSeriesOrder);

struct EgfRow {
  int n = 0;
  bool pass = false;
  std::string expected;
  std::string actual;
  /// Extra diagnosis on failure, e.g. that the series produced the
  /// coefficient-reversed polynomial.
  std::string note;
};

struct EgfReport {
  std::string series;
  int modulus = 1;
  std::vector<EgfRow> rows;

  bool passed() const noexcept;
};

/// n! [x^n] of the series against d_n^{(r)}, A_n^{(r)}(q), D_n^{(r)}(q)
/// for n = 0..order. Expected values come from the formula, from
/// sum_k C(n,k) q^k D_{n-k}, and from the D recurrence respectively.
EgfReport egf_check_derangements(int r, int order = kDefaultSeriesOrder);
EgfReport egf_check_eulerian(int r, int order = kDefaultSeriesOrder);
EgfReport egf_check_exc_derangements(int r, int order = kDefaultSeriesOrder);

}  // namespace wreath
