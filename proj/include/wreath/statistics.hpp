#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "wreath/letter.hpp"
#include "wreath/permutation.hpp"

namespace wreath {

/// A word of signed letters whose values need not form 1..m (images of phi,
/// shuffles of such images).
using Word = std::vector<SignedLetter>;

/// Descent positions, ascending, each in 0..n-1. Position 0 compares the
/// boundary 0 against the first letter.
using DescentSet = std::vector<int>;

DescentSet descent_set(std::span<const SignedLetter> word,
                       OrderVariant order = OrderVariant::Standard);
int maj(std::span<const SignedLetter> word, OrderVariant order = OrderVariant::Standard);
int des(std::span<const SignedLetter> word, OrderVariant order = OrderVariant::Standard);

/// Sum of exponents, not reduced mod r.
int sgn(std::span<const SignedLetter> word) noexcept;

/// Number of positions i with word_i < i, the integer i read as a plain letter.
int subcedant_count(std::span<const SignedLetter> word,
                    OrderVariant order = OrderVariant::Standard);

/// Index i is a weak excedant when sigma(i) = i exactly, or when s_i != i and
/// the letter at position s_i is larger than the letter at position i in the
/// standard order. An index holding z^e i with e > 0 never counts.
int weak_excedance_count(const CyclicPermutation& sigma);

struct StatRecord {
  int maj = 0;
  int des = 0;
  int sgn = 0;
  int exc = 0;
  int sub = 0;

  friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

StatRecord stat_record(const CyclicPermutation& sigma,
                       OrderVariant order = OrderVariant::Standard);

void to_json(nlohmann::json& out, const StatRecord& record);

/// Deletes the fixed points and relabels the surviving values to 1..n-k in
/// order, carrying exponents. The result is a cyclic derangement.
CyclicPermutation dp(const CyclicPermutation& sigma);

/// For sigma in C_r wr S_m and m <= n: values of subcedants go to 1..sub in
/// increasing order, fixed points to sub+1..sub+k, the remaining values in
/// decreasing order to n, n-1, .... Exponents are carried over.
Word phi(const CyclicPermutation& sigma, int n);

/// Lazy range over all interleavings of two words with disjoint value sets,
/// in lexicographic order of the positions taken by the first word.
class ShuffleRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using reference = const Word&;

    iterator() = default;
    explicit iterator(ShuffleRange* owner) : owner_(owner) {}

    reference operator*() const { return owner_->current_; }
    iterator& operator++() {
      owner_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.owner_ == nullptr || it.owner_->done();
    }

   private:
    ShuffleRange* owner_ = nullptr;
  };

  ShuffleRange(Word alpha, Word beta);

  iterator begin() { return iterator(this); }
  bool done() const noexcept { return done_; }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  void advance();
  void materialize();

  Word alpha_;
  Word beta_;
  std::vector<bool> from_alpha_;
  Word current_;
  bool done_ = false;
};

/// Throws OverlappingAlphabets when alpha and beta share a value.
ShuffleRange shuffles(Word alpha, Word beta);

}  // namespace wreath
