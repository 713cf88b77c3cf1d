#include <gtest/gtest.h>

#include "wreath/counting.hpp"
#include "wreath/error.hpp"
#include "wreath/generating.hpp"

using namespace wreath;

namespace {

const BivariatePolynomial q = BivariatePolynomial::q();

}  // namespace

TEST(Generating, DerangementSeries) {
  EXPECT_EQ(coefficient_as_integer(derangement_egf(2, 4), 2), 5);
  for (int r = 1; r <= 5; ++r) {
    const auto series = derangement_egf(r, 10);
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(coefficient_as_integer(series, n), d_formula(r, n));
  }
  EXPECT_TRUE(egf_check_derangements(3, 7).passed());
}

TEST(Generating, ExcDerangementSeries) {
  EXPECT_EQ(coefficient_as_polynomial(exc_derangement_egf(2, 3), 2), 4 * q + 1);
  for (int r = 1; r <= 4; ++r) {
    const EgfReport report = egf_check_exc_derangements(r, 7);
    EXPECT_TRUE(report.passed()) << r;
    EXPECT_EQ(report.rows.size(), 8u);
  }
}

TEST(Generating, EulerianSeriesCoefficients) {
  const auto series = eulerian_egf(1, 4);
  EXPECT_EQ(coefficient_as_polynomial(series, 0), 1);
  EXPECT_EQ(coefficient_as_polynomial(series, 2), 1 + q);
  EXPECT_EQ(coefficient_as_polynomial(series, 3), q * q + 4 * q + 1);
}

TEST(Generating, EulerianSeriesMatchesOnlyForModulusTwo) {
  EXPECT_TRUE(egf_check_eulerian(2, 7).passed());
  for (int r : {1, 3}) {
    const EgfReport report = egf_check_eulerian(r, 7);
    EXPECT_FALSE(report.passed());
    EXPECT_TRUE(report.rows[0].pass);
    for (std::size_t n = 1; n < report.rows.size(); ++n) {
      EXPECT_FALSE(report.rows[n].pass);
      // The series carries q^n A_n(1/q): the coefficient list reversed.
      EXPECT_FALSE(report.rows[n].note.empty());
    }
  }
  const EgfReport r3 = egf_check_eulerian(3, 2);
  EXPECT_EQ(r3.rows[1].expected, "q + 2");
  EXPECT_EQ(r3.rows[1].actual, "2q + 1");
}

TEST(Generating, RejectsBadModulus) {
  EXPECT_THROW(derangement_egf(0, 3), Error);
  EXPECT_THROW(eulerian_egf(0, 3), Error);
  EXPECT_THROW(exc_derangement_egf(-1, 3), Error);
}
