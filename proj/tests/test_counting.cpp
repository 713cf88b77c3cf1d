#include <gtest/gtest.h>

#include "oracle.hpp"
#include "wreath/algebra/qanalog.hpp"
#include "wreath/counting.hpp"
#include "wreath/error.hpp"
#include "wreath/published_table.hpp"

using namespace wreath;

namespace {

const BivariatePolynomial q = BivariatePolynomial::q();
const BivariatePolynomial t = BivariatePolynomial::t();

BivariatePolynomial qpoly(std::vector<Integer> c) { return BivariatePolynomial::from_q_coefficients(c); }

}  // namespace

TEST(Counting, FormulaExamples) {
  EXPECT_EQ(d_formula(2, 4), 233);
  EXPECT_EQ(d_formula(1, 6), 265);
  EXPECT_EQ(d_formula(3, 2), 13);
  EXPECT_THROW(d_formula(0, 2), Error);
  EXPECT_THROW(d_formula(2, -1), Error);
}

TEST(Counting, RecurrenceExamples) {
  EXPECT_EQ(d_two_term(5, 3), 614);
  EXPECT_EQ(d_two_term(4, 6), 2296777);
  for (int r = 1; r <= 6; ++r) EXPECT_EQ(d_two_term(r, 1), r - 1);
  EXPECT_EQ(d_one_term(2, 2), 5);
  EXPECT_EQ(d_one_term(3, 4), 1393);
  for (int r = 1; r <= 6; ++r) EXPECT_EQ(d_one_term(r, 0), 1);
}

TEST(Counting, MixedTransformExamples) {
  EXPECT_EQ(d_mixed_transform(2, 3), 29);
  EXPECT_EQ(d_mixed_transform(2, 0), 1);
  EXPECT_EQ(d_mixed_transform(3, 3), 116);
  try {
    d_mixed_transform(1, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedModulus);
  }
}

TEST(Counting, FixedPointCountExamples) {
  EXPECT_EQ(fixed_point_count(1, 3, 1), 3);
  for (int r = 1; r <= 4; ++r) {
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(fixed_point_count(r, n, n), 1);
  }
  Integer total(0);
  for (int k = 0; k <= 3; ++k) total += fixed_point_count(2, 3, k);
  EXPECT_EQ(total, 48);
}

TEST(Counting, AllRoutesAgreeWithInclusionExclusion) {
  for (int r = 1; r <= 6; ++r) {
    for (int n = 0; n <= 12; ++n) {
      const Integer d = d_formula(r, n);
      if (r <= 4 && n <= 9) {
        EXPECT_EQ(d, Integer(std::to_string(oracle::derangements(r, n))));
      }
      EXPECT_EQ(d_two_term(r, n), d);
      EXPECT_EQ(d_one_term(r, n), d);
      if (r >= 2) {
        EXPECT_EQ(d_mixed_transform(r, n), d);
      }
    }
  }
}

TEST(Counting, TablesAndBruteForce) {
  const CountTable table = count_table(3, 5, CountMethod::BruteForce);
  EXPECT_EQ(table.values, (std::vector<Integer>{1, 2, 13, 116, 1393, 20894}));
  EXPECT_EQ(table.method, CountMethod::BruteForce);
  for (CountMethod m : {CountMethod::Formula, CountMethod::TwoTerm, CountMethod::OneTerm, CountMethod::Transform}) {
    const CountTable other = count_table(3, 5, m);
    EXPECT_EQ(other.values, table.values) << to_string(m);
    EXPECT_EQ(other[0], 1);
    EXPECT_EQ(other[1], 2);
  }
  EXPECT_THROW(count_table(3, 9, CountMethod::BruteForce, 1000), EnumerationRefused);
}

TEST(Counting, PublishedTable) {
  EXPECT_EQ(published_value(1, 6), 265);
  EXPECT_EQ(published_value(3, 2), 12);
  EXPECT_THROW(published_value(6, 0), Error);
  const auto discrepancies = published_discrepancies();
  ASSERT_EQ(discrepancies.size(), 1u);
  EXPECT_EQ(discrepancies[0].modulus, 3);
  EXPECT_EQ(discrepancies[0].size, 2);
  EXPECT_EQ(discrepancies[0].printed, 12);
  EXPECT_EQ(discrepancies[0].computed, 13);
  EXPECT_EQ(d_bruteforce(3, 2), 13);
}

TEST(Counting, ProbabilityBound) {
  for (int r = 1; r <= 5; ++r) {
    for (int n = 0; n <= 8; ++n) {
      const ProbabilityBound b = probability_bound(r, n);
      EXPECT_TRUE(b.holds) << r << "," << n;
      EXPECT_LT(b.limit_lower, b.limit_upper);
      EXPECT_GT(b.tolerance, 0);
      EXPECT_EQ(b.ratio, Rational(d_formula(r, n)) / Rational(group_order(r, n)));
    }
  }
  // e^{-1} lies in the bracket for r = 1.
  const ProbabilityBound b = probability_bound(1, 3);
  EXPECT_LT(b.limit_lower, Rational(3679, 10000));
  EXPECT_GT(b.limit_upper, Rational(3678, 10000));
}

TEST(CountingQt, FormulaExamples) {
  EXPECT_EQ(qt_formula(2, 2), q + t + q * t + t * t + q * t * t);
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(qt_formula(r, 0), 1);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(qt_formula(1, n).at_t_one(), gessel_bruteforce(n));
}

TEST(CountingQt, RecurrenceExamples) {
  EXPECT_EQ(qt_two_term(3, 1), t + t * t);
  EXPECT_EQ(qt_two_term(1, 1), 0);
  EXPECT_EQ(qt_two_term(2, 2), q + t + q * t + t * t + q * t * t);
  EXPECT_EQ(qt_two_term(1, 2), q);
  EXPECT_EQ(qt_one_term(1, 2), q);
  EXPECT_EQ(qt_one_term(4, 0), 1);
  EXPECT_EQ(qt_one_term(2, 2), (1 + t) * (1 + q) * t + q);
}

TEST(CountingQt, AllRoutesAgreeWithTheOracle) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 4; ++n) {
      const BivariatePolynomial oracle_value = oracle::distribution(
          r, n, true, [](const oracle::Element& e) { return std::make_pair(oracle::maj(e), oracle::sgn(e)); });
      EXPECT_EQ(qt_formula(r, n), oracle_value);
      EXPECT_EQ(qt_two_term(r, n), oracle_value);
      EXPECT_EQ(qt_one_term(r, n), oracle_value);
      EXPECT_EQ(qt_bruteforce(r, n), oracle_value);
      EXPECT_EQ(qt_formula(r, n).evaluate(1, 1), Rational(d_formula(r, n)));
    }
  }
}

TEST(CountingQt, GroupTotal) {
  EXPECT_EQ(group_total_qt(1, 3), q_factorial(3));
  EXPECT_EQ(group_total_qt(2, 1), 1 + t);
  EXPECT_EQ(group_total_qt(3, 0), 1);
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 4; ++n) {
      EXPECT_EQ(group_total_qt(r, n), pow(t_bracket(r), n) * oracle::q_factorial(n));
      EXPECT_EQ(group_total_qt_bruteforce(r, n), group_total_qt(r, n));
    }
  }
}

TEST(CountingQt, OrderInvariance) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 4; ++n) {
      for (bool derangements_only : {false, true}) {
        EXPECT_EQ(maj_sgn_distribution(r, n, derangements_only, OrderVariant::Standard),
                  maj_sgn_distribution(r, n, derangements_only, OrderVariant::Alternate));
      }
    }
  }
}

TEST(CountingEulerian, Examples) {
  // q^{n-des} normalization: the two classical permutations of S_2 give q^2 and q.
  EXPECT_EQ(eulerian_poly(1, 2, EulerianRoute::NonDescents), q + q * q);
  EXPECT_EQ(eulerian_poly(1, 2, EulerianRoute::WeakExcedances), q + q * q);
  EXPECT_EQ(eulerian_poly(2, 1, EulerianRoute::NonDescents), 1 + q);
  EXPECT_EQ(eulerian_poly(3, 1, EulerianRoute::WeakExcedances), q + 2);
  EXPECT_FALSE(reciprocal_check(eulerian_poly(3, 1, EulerianRoute::NonDescents), 1));
}

TEST(CountingEulerian, RoutesAgreeWithTheOracle) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 4; ++n) {
      const BivariatePolynomial by_des = oracle::distribution(
          r, n, false, [n](const oracle::Element& e) { return std::make_pair(n - oracle::des(e), 0); });
      const BivariatePolynomial by_exc =
          oracle::distribution(r, n, false, [](const oracle::Element& e) { return std::make_pair(oracle::exc(e), 0); });
      EXPECT_EQ(by_des, by_exc);
      EXPECT_EQ(eulerian_poly(r, n, EulerianRoute::NonDescents), by_des);
      EXPECT_EQ(eulerian_poly(r, n, EulerianRoute::WeakExcedances), by_exc);
      EXPECT_EQ(eulerian_from_exc(r, n), by_des);
    }
  }
}

TEST(CountingEulerian, ConvolutionExamples) {
  EXPECT_EQ(eulerian_from_exc(2, 1), q + 1);
  EXPECT_EQ(eulerian_from_exc(1, 2), q * q + q);
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(eulerian_from_exc(r, 0), 1);
}

TEST(CountingEulerian, Palindromicity) {
  for (int n = 0; n <= 5; ++n) {
    EXPECT_TRUE(reciprocal_check(eulerian_from_exc(2, n), n));
    EXPECT_TRUE(is_palindromic(eulerian_from_exc(1, n)));
    if (n >= 1) {
      EXPECT_TRUE(reciprocal_check(eulerian_from_exc(1, n), n + 1));
    }
  }
  EXPECT_FALSE(is_palindromic(eulerian_from_exc(3, 1)));
}

TEST(CountingExc, Examples) {
  EXPECT_EQ(exc_derangement_poly(2, 2), 4 * q + 1);
  EXPECT_EQ(exc_derangement_poly(2, 3), 8 * q * q + 20 * q + 1);
  EXPECT_EQ(exc_derangement_poly(1, 2), q);
  for (int r = 1; r <= 5; ++r) {
    EXPECT_EQ(exc_derangement_poly(r, 0), 1);
    EXPECT_EQ(exc_derangement_poly(r, 1), r - 1);
    EXPECT_EQ(exc_derangement_poly(r, 2), r * r * q + (r - 1) * (r - 1));
    EXPECT_EQ(exc_derangement_poly(r, 3), r * r * r * q * q + (4 * r - 3) * r * r * q + (r - 1) * (r - 1) * (r - 1));
  }
}

TEST(CountingExc, RecurrenceAgreesWithEnumeration) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 5; ++n) {
      EXPECT_EQ(exc_derangement_poly(r, n), exc_derangement_bruteforce(r, n));
      EXPECT_EQ(exc_derangement_poly(r, n).evaluate(1, 1), Rational(d_formula(r, n)));
    }
  }
  EXPECT_EQ(exc_derangement_poly(3, 4), qpoly({16, 513, 783, 81}));
  const auto table = exc_derangement_table(2, 5);
  ASSERT_EQ(table.size(), 6u);
  EXPECT_EQ(table[5], qpoly({1, 232, 1312, 752, 32}));
}
