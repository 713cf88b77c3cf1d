#include "wreath/statistics.hpp"

#include <algorithm>
#include <set>

#include "wreath/error.hpp"

namespace wreath {

DescentSet descent_set(std::span<const SignedLetter> word, OrderVariant order) {
  DescentSet out;
  SignedLetter previous = SignedLetter::zero();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (compare(previous, word[i], order) > 0) out.push_back(static_cast<int>(i));
    previous = word[i];
  }
  return out;
}

int maj(std::span<const SignedLetter> word, OrderVariant order) {
  int total = 0;
  SignedLetter previous = SignedLetter::zero();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (compare(previous, word[i], order) > 0) total += static_cast<int>(i);
    previous = word[i];
  }
  return total;
}

int des(std::span<const SignedLetter> word, OrderVariant order) {
  return static_cast<int>(descent_set(word, order).size());
}

int sgn(std::span<const SignedLetter> word) noexcept {
  int total = 0;
  for (const SignedLetter& x : word) total += x.exponent();
  return total;
}

int subcedant_count(std::span<const SignedLetter> word, OrderVariant order) {
  int count = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (compare(word[i], SignedLetter(static_cast<int>(i) + 1), order) < 0) ++count;
  }
  return count;
}

int weak_excedance_count(const CyclicPermutation& sigma) {
  const auto letters = sigma.letters();
  int count = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const SignedLetter image = letters[i];
    const int position = static_cast<int>(i) + 1;
    if (image.value() == position) {
      if (!image.is_signed()) ++count;
      continue;
    }
    if (compare(letters[image.value() - 1], image) > 0) ++count;
  }
  return count;
}

StatRecord stat_record(const CyclicPermutation& sigma, OrderVariant order) {
  const auto word = sigma.letters();
  const DescentSet descents = descent_set(word, order);
  StatRecord record;
  for (int i : descents) record.maj += i;
  record.des = static_cast<int>(descents.size());
  record.sgn = sgn(word);
  record.exc = weak_excedance_count(sigma);
  record.sub = subcedant_count(word, order);
  return record;
}

void to_json(nlohmann::json& out, const StatRecord& record) {
  out = nlohmann::json{{"maj", record.maj},
                       {"des", record.des},
                       {"sgn", record.sgn},
                       {"exc", record.exc},
                       {"sub", record.sub}};
}

CyclicPermutation dp(const CyclicPermutation& sigma) {
  const auto letters = sigma.letters();
  const int n = sigma.size();
  std::vector<bool> fixed(n + 1, false);
  for (int i : fixed_points(sigma)) fixed[i] = true;

  // Surviving values coincide with surviving positions; rank them once.
  std::vector<int> rank(n + 1, 0);
  int next = 0;
  for (int v = 1; v <= n; ++v) {
    if (!fixed[v]) rank[v] = ++next;
  }
  std::vector<SignedLetter> reduced;
  reduced.reserve(next);
  for (int i = 1; i <= n; ++i) {
    if (fixed[i]) continue;
    const SignedLetter x = letters[i - 1];
    reduced.emplace_back(rank[x.value()], x.exponent());
  }
  return CyclicPermutation::from_letters(sigma.modulus(), std::move(reduced));
}

Word phi(const CyclicPermutation& sigma, int n) {
  const int m = sigma.size();
  if (m > n) {
    throw Error(ErrorKind::AlphabetTooSmall,
                "phi needs n >= " + std::to_string(m) + ", got " + std::to_string(n));
  }
  const auto letters = sigma.letters();
  std::vector<int> subcedants;
  std::vector<int> fixed;
  std::vector<int> rest;
  for (int i = 1; i <= m; ++i) {
    const SignedLetter x = letters[i - 1];
    if (less(x, SignedLetter(i))) {
      subcedants.push_back(x.value());
    } else if (x == SignedLetter(i)) {
      fixed.push_back(x.value());
    } else {
      rest.push_back(x.value());
    }
  }
  std::sort(subcedants.begin(), subcedants.end());
  std::sort(fixed.begin(), fixed.end());
  std::sort(rest.begin(), rest.end(), std::greater<>());

  std::vector<int> relabel(m + 1, 0);
  int label = 0;
  for (int v : subcedants) relabel[v] = ++label;
  for (int v : fixed) relabel[v] = ++label;
  label = n;
  for (int v : rest) relabel[v] = label--;

  Word out;
  out.reserve(m);
  for (const SignedLetter& x : letters) out.emplace_back(relabel[x.value()], x.exponent());
  return out;
}

ShuffleRange::ShuffleRange(Word alpha, Word beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  std::set<int> values;
  for (const SignedLetter& x : alpha_) values.insert(x.value());
  for (const SignedLetter& x : beta_) {
    if (!values.insert(x.value()).second) {
      throw Error(ErrorKind::OverlappingAlphabets,
                  "value " + std::to_string(x.value()) + " occurs in both words");
    }
  }
  // Lexicographically smallest mask puts beta first: false < true.
  from_alpha_.assign(beta_.size(), false);
  from_alpha_.resize(alpha_.size() + beta_.size(), true);
  materialize();
}

void ShuffleRange::materialize() {
  current_.clear();
  current_.reserve(from_alpha_.size());
  std::size_t a = 0;
  std::size_t b = 0;
  for (bool take_alpha : from_alpha_) current_.push_back(take_alpha ? alpha_[a++] : beta_[b++]);
}

void ShuffleRange::advance() {
  if (done_) return;
  if (!std::next_permutation(from_alpha_.begin(), from_alpha_.end())) {
    done_ = true;
    return;
  }
  materialize();
}

ShuffleRange shuffles(Word alpha, Word beta) { return ShuffleRange(std::move(alpha), std::move(beta)); }

}  // namespace wreath
