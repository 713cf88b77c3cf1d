#include <gtest/gtest.h>

#include "wreath/enumerate.hpp"
#include "wreath/error.hpp"
#include "wreath/permutation.hpp"

using namespace wreath;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

CyclicPermutation plain(std::vector<int> values) {
  std::vector<SignedLetter> letters;
  for (int v : values) letters.emplace_back(v);
  return CyclicPermutation::from_letters(1, letters);
}

}  // namespace

TEST(Permutation, MakeExamples) {
  EXPECT_EQ(CyclicPermutation::make(1, 3, {{0, 1}, {0, 2}, {0, 3}}), CyclicPermutation::identity(1, 3));
  const CyclicPermutation z = CyclicPermutation::make(2, 2, {{1, 1}, {1, 2}});
  EXPECT_EQ(z.at(1), SignedLetter(1, 1));
  EXPECT_EQ(z.at(2), SignedLetter(2, 1));
  EXPECT_EQ(z.modulus(), 2);
  EXPECT_EQ(z.size(), 2);
}

TEST(Permutation, MakeRejectsEachViolationDistinctly) {
  EXPECT_EQ(kind_of([] { CyclicPermutation::make(2, 2, {{0, 1}, {0, 1}}); }), ErrorKind::NotAPermutation);
  EXPECT_EQ(kind_of([] { CyclicPermutation::make(2, 2, {{2, 1}, {0, 2}}); }), ErrorKind::ExponentOutOfRange);
  EXPECT_EQ(kind_of([] { CyclicPermutation::make(2, 3, {{0, 1}, {0, 2}}); }), ErrorKind::WrongLength);
  EXPECT_EQ(kind_of([] { CyclicPermutation::make(0, 0, {}); }), ErrorKind::InvalidModulus);
  EXPECT_EQ(kind_of([] { CyclicPermutation::make(1, -1, {}); }), ErrorKind::InvalidSize);
  EXPECT_EQ(kind_of([] { CyclicPermutation::make(1, 2, {{0, 1}, {0, 3}}); }), ErrorKind::NotAPermutation);
}

TEST(Permutation, EmptyWordIsLegal) {
  const CyclicPermutation empty = CyclicPermutation::make(3, 0, {});
  EXPECT_EQ(empty.size(), 0);
  EXPECT_TRUE(is_derangement(empty));
  EXPECT_EQ(format(empty), "");
  EXPECT_EQ(parse_permutation("", 3), empty);
}

TEST(Permutation, ApplyExamples) {
  const CyclicPermutation z = CyclicPermutation::make(2, 2, {{1, 1}, {1, 2}});
  EXPECT_EQ(apply(z, SignedLetter(1)), SignedLetter(1, 1));
  EXPECT_EQ(apply(CyclicPermutation::identity(4, 3), SignedLetter(3, 1)), SignedLetter(3, 1));
  const CyclicPermutation sigma = CyclicPermutation::make(2, 2, {{1, 2}, {0, 1}});
  EXPECT_EQ(apply(sigma, SignedLetter(1, 1)), SignedLetter(2));
  EXPECT_EQ(kind_of([&] { apply(sigma, SignedLetter::zero()); }), ErrorKind::ZeroLetter);
  EXPECT_EQ(kind_of([&] { apply(sigma, SignedLetter(3)); }), ErrorKind::ValueOutOfRange);
}

TEST(Permutation, InverseUndoesApplyOnEveryLetter) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 3; ++n) {
      for (const CyclicPermutation& sigma : enumerate_group(r, n)) {
        const CyclicPermutation tau = inverse(sigma);
        for (int v = 1; v <= n; ++v) {
          for (int e = 0; e < r; ++e) {
            const SignedLetter x(v, e);
            EXPECT_EQ(apply(tau, apply(sigma, x)), x);
            EXPECT_EQ(apply(sigma, apply(tau, x)), x);
          }
        }
      }
    }
  }
}

TEST(Permutation, FixedPointExamples) {
  EXPECT_EQ(fixed_points(plain({5, 3, 1, 4, 7, 6, 2})), (std::vector<int>{4, 6}));
  EXPECT_EQ(fixed_points(CyclicPermutation::identity(3, 4)), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_TRUE(fixed_points(CyclicPermutation::make(2, 2, {{1, 1}, {1, 2}})).empty());
}

TEST(Permutation, CycleDecomposition) {
  using Cycles = std::vector<std::vector<int>>;
  EXPECT_EQ(cycle_decomposition(plain({2, 1})), (Cycles{{2, 1}}));
  EXPECT_EQ(cycle_decomposition(CyclicPermutation::identity(1, 3)), (Cycles{{1}, {2}, {3}}));
  // 43152 is one 5-cycle 1->4->5->2->3->1. Written from its largest element
  // it reads (5 2 3 1 4); (4 5 2 3 1) is the same cycle rotated.
  const Cycles cycles = cycle_decomposition(plain({4, 3, 1, 5, 2}));
  EXPECT_EQ(cycles, (Cycles{{5, 2, 3, 1, 4}}));
  std::vector<int> rotated = cycles[0];
  std::rotate(rotated.begin(), std::find(rotated.begin(), rotated.end(), 4), rotated.end());
  EXPECT_EQ(rotated, (std::vector<int>{4, 5, 2, 3, 1}));
  // Exponents do not change the underlying permutation.
  EXPECT_EQ(cycle_decomposition(CyclicPermutation::make(2, 2, {{1, 2}, {1, 1}})), (Cycles{{2, 1}}));
}

TEST(Permutation, TextRoundTrip) {
  const CyclicPermutation sigma = CyclicPermutation::make(3, 3, {{0, 3}, {1, 2}, {0, 1}});
  EXPECT_EQ(format(sigma), "3,2^1,1");
  EXPECT_EQ(parse_permutation("3,2^1,1", 3), sigma);
  for (int r = 1; r <= 3; ++r) {
    for (const CyclicPermutation& s : enumerate_group(r, 3)) EXPECT_EQ(parse_permutation(format(s), r), s);
  }
}

TEST(Permutation, ParseRejectsNonCanonicalText) {
  for (const char* bad : {"2^0,1", "02,1", "2, 1", "2,,1", "2^,1", "2,1,", "a", "1^3", "1,1", "3,1"}) {
    EXPECT_THROW(parse_permutation(bad, 3), Error) << bad;
  }
}

TEST(Permutation, OrderingIsValueWordThenExponentWord) {
  const CyclicPermutation a = CyclicPermutation::make(2, 2, {{1, 1}, {1, 2}});
  const CyclicPermutation b = CyclicPermutation::make(2, 2, {{0, 2}, {0, 1}});
  const CyclicPermutation c = CyclicPermutation::make(2, 2, {{0, 1}, {1, 2}});
  EXPECT_LT(a, b);
  EXPECT_LT(c, a);
}
