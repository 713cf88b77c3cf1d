#include "wreath/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wreath/algebra/qanalog.hpp"
#include "wreath/counting.hpp"
#include "wreath/statistics.hpp"

namespace wreath {

namespace {

std::string word_key(const Word& word) {
  std::string out;
  for (const SignedLetter& x : word) {
    if (!out.empty()) out += ',';
    out += to_string(x);
  }
  return out;
}

}  // namespace

bool FiberReport::passed() const noexcept {
  return total_matches && size_mismatches == 0 && fiber_count_mismatches == 0 && not_bijective == 0 &&
         descent_mismatches == 0 && sgn_mismatches == 0;
}

FiberReport check_fibers(int r, int n, std::uint64_t bound) {
  FiberReport report;
  std::map<CyclicPermutation, std::vector<CyclicPermutation>> fibers;
  for (const CyclicPermutation& sigma : enumerate_group(r, n, bound)) {
    ++report.elements;
    fibers[dp(sigma)].push_back(sigma);
  }
  report.fibers = fibers.size();

  auto note = [&report](const std::string& what) {
    if (report.example.empty()) report.example = what;
  };

  std::vector<std::uint64_t> fibers_by_size(n + 1, 0);
  for (const auto& [alpha, members] : fibers) {
    const int m = alpha.size();
    const int k = n - m;
    ++fibers_by_size[m];
    if (Integer(static_cast<unsigned long>(members.size())) != binomial(n, k)) {
      ++report.size_mismatches;
      note("fiber over " + format(alpha) + " has " + std::to_string(members.size()) + " elements");
    }

    const int sub = subcedant_count(alpha.letters());
    Word gamma;
    for (int i = 1; i <= k; ++i) gamma.emplace_back(sub + i);
    std::set<std::string> expected;
    for (const Word& w : shuffles(phi(alpha, n), gamma)) expected.insert(word_key(w));

    std::set<std::string> seen;
    for (const CyclicPermutation& sigma : members) {
      const Word image = phi(sigma, n);
      const std::string key = word_key(image);
      if (!seen.insert(key).second || expected.count(key) == 0) {
        ++report.not_bijective;
        note("phi(" + format(sigma) + ") = " + key + " is repeated or not a shuffle");
      }
      if (descent_set(image) != descent_set(sigma.letters())) {
        ++report.descent_mismatches;
        note("descent set changes under phi at " + format(sigma));
      }
      if (sgn(image) != sgn(sigma.letters())) {
        ++report.sgn_mismatches;
        note("sgn changes under phi at " + format(sigma));
      }
    }
    if (seen.size() != expected.size()) {
      ++report.not_bijective;
      note("phi misses shuffles over " + format(alpha));
    }
  }

  for (int m = 0; m <= n; ++m) {
    if (Integer(static_cast<unsigned long>(fibers_by_size[m])) != d_formula(r, m)) {
      ++report.fiber_count_mismatches;
      note("wrong number of fibers over derangements of size " + std::to_string(m));
    }
  }

  Integer total(0);
  for (int k = 0; k <= n; ++k) total += binomial(n, k) * d_formula(r, n - k);
  report.total_matches =
      total == group_order(r, n) && Integer(static_cast<unsigned long>(report.elements)) == total;
  return report;
}

ShuffleReport check_shuffle_identity(int r, int total, std::uint64_t bound) {
  if (r < 1) throw Error(ErrorKind::InvalidModulus, "modulus r must be >= 1");
  if (total < 0) throw Error(ErrorKind::InvalidSize, "size must be >= 0");
  const Integer work = factorial(total) * power(Integer(r), total) * power(Integer(2), total);
  if (work > Integer(static_cast<unsigned long>(bound))) throw EnumerationRefused(work, bound);

  ShuffleReport report;
  const int max_maj = total * (total + 1) / 2;
  std::vector<long> counts(max_maj + 1);

  for (int a = 0; a <= total; ++a) {
    std::vector<long> binom(max_maj + 1, 0);
    const std::vector<Integer> coefficients = q_binomial(total, a).q_coefficients();
    for (std::size_t i = 0; i < coefficients.size(); ++i) binom[i] = coefficients[i].get_si();

    std::vector<bool> in_alpha(total, false);
    std::fill(in_alpha.end() - a, in_alpha.end(), true);
    do {
      std::vector<int> alpha_values;
      std::vector<int> beta_values;
      for (int v = 1; v <= total; ++v) (in_alpha[v - 1] ? alpha_values : beta_values).push_back(v);
      do {
        do {
          std::vector<int> exponents(total, 0);
          for (;;) {
            Word alpha;
            Word beta;
            for (int i = 0; i < a; ++i) alpha.emplace_back(alpha_values[i], exponents[i]);
            for (int i = 0; i < total - a; ++i) beta.emplace_back(beta_values[i], exponents[a + i]);
            const int shift = maj(alpha) + maj(beta);
            const int sign = sgn(alpha) + sgn(beta);

            std::fill(counts.begin(), counts.end(), 0);
            bool sign_ok = true;
            for (const Word& w : shuffles(alpha, beta)) {
              ++counts[maj(w)];
              sign_ok = sign_ok && sgn(w) == sign;
              ++report.words;
            }
            bool ok = sign_ok;
            for (int d = 0; d <= max_maj && ok; ++d) {
              const long want = d >= shift ? binom[d - shift] : 0;
              ok = counts[d] == want;
            }
            ++report.pairs;
            if (!ok) {
              ++report.failures;
              if (report.example.empty()) report.example = word_key(alpha) + " | " + word_key(beta);
            }

            int i = 0;
            while (i < total && ++exponents[i] == r) exponents[i++] = 0;
            if (i == total) break;
          }
        } while (std::next_permutation(beta_values.begin(), beta_values.end()));
      } while (std::next_permutation(alpha_values.begin(), alpha_values.end()));
    } while (std::next_permutation(in_alpha.begin(), in_alpha.end()));
  }
  return report;
}

}  // namespace wreath
