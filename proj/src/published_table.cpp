#include "wreath/published_table.hpp"

#include <array>

#include "wreath/counting.hpp"
#include "wreath/error.hpp"

namespace wreath {

namespace {

constexpr std::array<std::array<long, kPublishedMaxSize + 1>, kPublishedMaxModulus> kPrinted{{
    {1, 0, 1, 2, 9, 44, 265},
    {1, 1, 5, 29, 233, 2329, 27949},
    {1, 2, 12, 116, 1393, 20894, 376093},
    {1, 3, 25, 299, 4785, 95699, 2296777},
    {1, 4, 41, 614, 12281, 307024, 9210721},
}};

}  // namespace

Integer published_value(int r, int n) {
  if (r < 1 || r > kPublishedMaxModulus || n < 0 || n > kPublishedMaxSize) {
    throw Error(ErrorKind::InvalidArgument, "cell outside the printed table");
  }
  return Integer(kPrinted[r - 1][n]);
}

std::vector<TableDiscrepancy> published_discrepancies() {
  std::vector<TableDiscrepancy> out;
  for (int r = 1; r <= kPublishedMaxModulus; ++r) {
    for (int n = 0; n <= kPublishedMaxSize; ++n) {
      const Integer printed = published_value(r, n);
      const Integer computed = d_formula(r, n);
      if (printed != computed) out.push_back({r, n, printed, computed});
    }
  }
  return out;
}

}  // namespace wreath
