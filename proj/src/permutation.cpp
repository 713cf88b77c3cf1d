#include "wreath/permutation.hpp"

#include <algorithm>
#include <charconv>

#include "wreath/error.hpp"

namespace wreath {

namespace {

void check_modulus(int r) {
  if (r < 1) throw Error(ErrorKind::InvalidModulus, "modulus r must be >= 1, got " + std::to_string(r));
}

void validate(int r, std::span<const SignedLetter> letters) {
  const int n = static_cast<int>(letters.size());
  std::vector<bool> seen(n + 1, false);
  for (const SignedLetter& x : letters) {
    if (x.is_zero()) throw Error(ErrorKind::ZeroLetter, "a permutation word cannot contain 0");
    if (x.exponent() >= r) {
      throw Error(ErrorKind::ExponentOutOfRange,
                  "exponent " + std::to_string(x.exponent()) + " outside 0.." + std::to_string(r - 1));
    }
    if (x.value() > n || seen[x.value()]) {
      throw Error(ErrorKind::NotAPermutation,
                  "values do not form a permutation of 1.." + std::to_string(n));
    }
    seen[x.value()] = true;
  }
}

}  // namespace

CyclicPermutation CyclicPermutation::make(int r, int n,
                                          const std::vector<std::pair<int, int>>& letters) {
  check_modulus(r);
  if (n < 0) throw Error(ErrorKind::InvalidSize, "size n must be >= 0");
  if (static_cast<int>(letters.size()) != n) {
    throw Error(ErrorKind::WrongLength, "expected " + std::to_string(n) + " letters, got " +
                                            std::to_string(letters.size()));
  }
  std::vector<SignedLetter> word;
  word.reserve(letters.size());
  for (const auto& [exponent, value] : letters) {
    if (exponent < 0 || exponent >= r) {
      throw Error(ErrorKind::ExponentOutOfRange,
                  "exponent " + std::to_string(exponent) + " outside 0.." + std::to_string(r - 1));
    }
    if (value < 1 || value > n) {
      throw Error(ErrorKind::NotAPermutation,
                  "value " + std::to_string(value) + " outside 1.." + std::to_string(n));
    }
    word.emplace_back(value, exponent);
  }
  validate(r, word);
  return CyclicPermutation(r, std::move(word));
}

CyclicPermutation CyclicPermutation::from_letters(int r, std::vector<SignedLetter> letters) {
  check_modulus(r);
  validate(r, letters);
  return CyclicPermutation(r, std::move(letters));
}

CyclicPermutation CyclicPermutation::identity(int r, int n) {
  check_modulus(r);
  if (n < 0) throw Error(ErrorKind::InvalidSize, "size n must be >= 0");
  std::vector<SignedLetter> word;
  word.reserve(n);
  for (int i = 1; i <= n; ++i) word.emplace_back(i);
  return CyclicPermutation(r, std::move(word));
}

SignedLetter CyclicPermutation::at(int position) const {
  if (position < 1 || position > size()) {
    throw Error(ErrorKind::ValueOutOfRange, "position " + std::to_string(position) + " outside 1.." +
                                                std::to_string(size()));
  }
  return letters_[position - 1];
}

std::strong_ordering operator<=>(const CyclicPermutation& a, const CyclicPermutation& b) {
  if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (int i = 0; i < a.size(); ++i) {
    if (auto c = a.letters_[i].value() <=> b.letters_[i].value(); c != 0) return c;
  }
  for (int i = 0; i < a.size(); ++i) {
    if (auto c = a.letters_[i].exponent() <=> b.letters_[i].exponent(); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

SignedLetter apply(const CyclicPermutation& sigma, SignedLetter x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroLetter, "cannot apply a permutation to 0");
  const SignedLetter image = sigma.at(x.value());
  return SignedLetter(image.value(), (x.exponent() + image.exponent()) % sigma.modulus());
}

CyclicPermutation inverse(const CyclicPermutation& sigma) {
  const int r = sigma.modulus();
  std::vector<SignedLetter> word(sigma.size());
  for (int j = 1; j <= sigma.size(); ++j) {
    const SignedLetter x = sigma.at(j);
    word[x.value() - 1] = SignedLetter(j, (r - x.exponent()) % r);
  }
  return CyclicPermutation::from_letters(r, std::move(word));
}

std::vector<int> fixed_points(const CyclicPermutation& sigma) {
  std::vector<int> out;
  const auto letters = sigma.letters();
  for (int i = 0; i < sigma.size(); ++i) {
    if (!letters[i].is_signed() && letters[i].value() == i + 1) out.push_back(i + 1);
  }
  return out;
}

bool is_derangement(const CyclicPermutation& sigma) noexcept {
  const auto letters = sigma.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!letters[i].is_signed() && letters[i].value() == static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> cycle_decomposition(const CyclicPermutation& sigma) {
  const int n = sigma.size();
  const auto letters = sigma.letters();
  std::vector<bool> visited(n + 1, false);
  std::vector<std::vector<int>> cycles;
  // Scanning leaders from n downwards and reversing at the end yields
  // cycles sorted by leader with each leader the cycle maximum.
  for (int leader = n; leader >= 1; --leader) {
    if (visited[leader]) continue;
    std::vector<int> cycle;
    for (int i = leader; !visited[i]; i = letters[i - 1].value()) {
      visited[i] = true;
      cycle.push_back(i);
    }
    cycles.push_back(std::move(cycle));
  }
  std::reverse(cycles.begin(), cycles.end());
  return cycles;
}

std::string format(const CyclicPermutation& sigma) {
  std::string out;
  for (const SignedLetter& x : sigma.letters()) {
    if (!out.empty()) out += ',';
    out += to_string(x);
  }
  return out;
}

namespace {

int parse_positive(std::string_view token, std::string_view whole) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last || token.front() == '0' || value < 1) {
    throw Error(ErrorKind::Parse, "malformed letter in \"" + std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

CyclicPermutation parse_permutation(std::string_view text, int r) {
  check_modulus(r);
  std::vector<SignedLetter> word;
  if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      const std::string_view token =
          text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      const std::size_t caret = token.find('^');
      if (caret == std::string_view::npos) {
        word.emplace_back(parse_positive(token, text));
      } else {
        const int value = parse_positive(token.substr(0, caret), text);
        const int exponent = parse_positive(token.substr(caret + 1), text);
        word.emplace_back(value, exponent);
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return CyclicPermutation::from_letters(r, std::move(word));
}

}  // namespace wreath
