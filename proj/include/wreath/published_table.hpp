#pragma once

#include <vector>

#include "wreath/algebra/integer.hpp"

namespace wreath {

/// The cyclic derangement table as printed in the literature, r = 1..5 and
/// n = 0..6, kept verbatim (including the (3, 2) cell, printed as 12) so that
/// disagreements are reported rather than patched.
inline constexpr int kPublishedMaxModulus = 5;
inline constexpr int kPublishedMaxSize = 6;

/// Printed value for 1 <= r <= 5, 0 <= n <= 6; throws InvalidArgument outside.
Integer published_value(int r, int n);

struct TableDiscrepancy {
  int modulus = 0;
  int size = 0;
  Integer printed;
  Integer computed;
};

/// Cells of the printed table that disagree with d_formula.
std::vector<TableDiscrepancy> published_discrepancies();

}  // namespace wreath
