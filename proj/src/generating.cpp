#include "wreath/generating.hpp"

#include <algorithm>

#include "wreath/counting.hpp"

namespace wreath {

namespace {

using QSeries = TruncatedSeries<RationalFunctionQ>;

void check_modulus(int r) {
  if (r < 1) throw Error(ErrorKind::InvalidModulus, "modulus r must be >= 1");
}

RationalFunctionQ one_minus_q() { return RationalFunctionQ(QPolynomial(1) - QPolynomial::q()); }

RationalFunctionQ q_times(int c) { return RationalFunctionQ(QPolynomial::q().scaled(c)); }

BivariatePolynomial reversed(const BivariatePolynomial& p, int n) {
  std::vector<Integer> c = p.q_coefficients();
  c.resize(n + 1);
  std::reverse(c.begin(), c.end());
  return BivariatePolynomial::from_q_coefficients(c);
}

template <class Expected>
EgfReport check_q_series(const std::string& name, int r, const QSeries& series, Expected expected) {
  EgfReport report{name, r, {}};
  for (int n = 0; n <= series.order(); ++n) {
    EgfRow row;
    row.n = n;
    const BivariatePolynomial want = expected(n);
    row.expected = want.to_string();
    try {
      const BivariatePolynomial got = coefficient_as_polynomial(series, n);
      row.actual = got.to_string();
      row.pass = got == want;
      if (!row.pass && reversed(got, n) == want) {
        row.note = "series coefficient is q^n times the expected polynomial at 1/q";
      }
    } catch (const Error& e) {
      row.actual = "<not a polynomial>";
      row.note = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

bool EgfReport::passed() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const EgfRow& row) { return row.pass; });
}

TruncatedSeries<Rational> derangement_egf(int r, int order) {
  check_modulus(r);
  using Series = TruncatedSeries<Rational>;
  const Series numerator = Series::exp_linear(Rational(-1), order);
  const Series denominator(order, {Rational(1), Rational(-r)});
  return divide(numerator, denominator);
}

QSeries eulerian_egf(int r, int order) {
  check_modulus(r);
  const RationalFunctionQ a = one_minus_q();
  const QSeries numerator = QSeries::exp_linear(a, order).scaled(a);
  const QSeries denominator = QSeries::constant(1, order) -
                              QSeries::exp_linear(a * RationalFunctionQ(r), order).scaled(q_times(1));
  return divide(numerator, denominator);
}

QSeries exc_derangement_egf(int r, int order) {
  check_modulus(r);
  const QSeries numerator = QSeries::exp_linear(RationalFunctionQ(r - 1), order).scaled(one_minus_q());
  const QSeries denominator = QSeries::exp_linear(q_times(r), order) -
                              QSeries::exp_linear(RationalFunctionQ(r), order).scaled(q_times(1));
  return divide(numerator, denominator);
}

EgfReport egf_check_derangements(int r, int order) {
  const TruncatedSeries<Rational> series = derangement_egf(r, order);
  EgfReport report{"derangements", r, {}};
  for (int n = 0; n <= order; ++n) {
    EgfRow row;
    row.n = n;
    const Integer want = d_formula(r, n);
    row.expected = want.get_str();
    try {
      const Integer got = coefficient_as_integer(series, n);
      row.actual = got.get_str();
      row.pass = got == want;
    } catch (const Error& e) {
      row.actual = fraction_string(series[n] * Rational(factorial(n)));
      row.note = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

EgfReport egf_check_eulerian(int r, int order) {
  return check_q_series("eulerian", r, eulerian_egf(r, order),
                        [r](int n) { return eulerian_from_exc(r, n); });
}

EgfReport egf_check_exc_derangements(int r, int order) {
  const std::vector<BivariatePolynomial> table = exc_derangement_table(r, order);
  return check_q_series("exc-derangements", r, exc_derangement_egf(r, order),
                        [&table](int n) { return table[n]; });
}

}  // namespace wreath
