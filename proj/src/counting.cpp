#include "wreath/counting.hpp"

#include <algorithm>
#include <numeric>

#include "wreath/algebra/qanalog.hpp"
#include "wreath/error.hpp"
#include "wreath/statistics.hpp"

namespace wreath {

namespace {

void check_args(int r, int n) {
  if (r < 1) throw Error(ErrorKind::InvalidModulus, "modulus r must be >= 1, got " + std::to_string(r));
  if (n < 0) throw Error(ErrorKind::InvalidSize, "size n must be >= 0, got " + std::to_string(n));
}

// Dense (q-degree, t-degree) histogram, converted to a polynomial once.
class Histogram {
 public:
  Histogram(int q_max, int t_max) : t_span_(t_max + 1), counts_((q_max + 1) * (t_max + 1), 0) {}

  void add(int q_degree, int t_degree) { ++counts_[q_degree * t_span_ + t_degree]; }

  BivariatePolynomial polynomial() const {
    BivariatePolynomial out;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (counts_[i] == 0) continue;
      const int qd = static_cast<int>(i) / t_span_;
      const int td = static_cast<int>(i) % t_span_;
      out += BivariatePolynomial::monomial(qd, td, Integer(static_cast<unsigned long>(counts_[i])));
    }
    return out;
  }

 private:
  int t_span_;
  std::vector<std::uint64_t> counts_;
};

int max_maj(int n) { return n * (n - 1) / 2; }

}  // namespace

const char* to_string(CountMethod method) noexcept {
  switch (method) {
    case CountMethod::Formula: return "formula";
    case CountMethod::TwoTerm: return "two-term";
    case CountMethod::OneTerm: return "one-term";
    case CountMethod::Transform: return "transform";
    case CountMethod::BruteForce: return "brute-force";
  }
  return "unknown";
}

CountTable count_table(int r, int max_n, CountMethod method, std::uint64_t bound) {
  check_args(r, max_n);
  CountTable table{r, max_n, method, {}};
  table.values.reserve(max_n + 1);
  switch (method) {
    case CountMethod::Formula:
    case CountMethod::Transform:
    case CountMethod::BruteForce:
      for (int n = 0; n <= max_n; ++n) {
        if (method == CountMethod::Formula) table.values.push_back(d_formula(r, n));
        else if (method == CountMethod::Transform) table.values.push_back(d_mixed_transform(r, n));
        else table.values.push_back(d_bruteforce(r, n, bound));
      }
      break;
    case CountMethod::TwoTerm:
      for (int n = 0; n <= max_n; ++n) {
        if (n == 0) table.values.emplace_back(1);
        else if (n == 1) table.values.emplace_back(r - 1);
        else {
          table.values.push_back((r * n - 1) * table.values[n - 1] + r * (n - 1) * table.values[n - 2]);
        }
      }
      break;
    case CountMethod::OneTerm:
      for (int n = 0; n <= max_n; ++n) {
        if (n == 0) table.values.emplace_back(1);
        else table.values.push_back(r * n * table.values[n - 1] + (n % 2 == 0 ? 1 : -1));
      }
      break;
  }
  return table;
}

Integer d_formula(int r, int n) {
  check_args(r, n);
  Rational sum = 0;
  for (int i = 0; i <= n; ++i) {
    Rational term(1, 1);
    term /= Rational(power(Integer(r), static_cast<unsigned>(i)) * factorial(i));
    sum += (i % 2 == 0) ? term : Rational(-term);
  }
  const Rational total = sum * Rational(group_order(r, n));
  if (total.get_den() != 1) {
    throw Error(ErrorKind::NotPolynomial, "alternating sum is not integral: " + fraction_string(total));
  }
  return total.get_num();
}

Integer d_two_term(int r, int n) { return count_table(r, n, CountMethod::TwoTerm)[n]; }

Integer d_one_term(int r, int n) { return count_table(r, n, CountMethod::OneTerm)[n]; }

Integer d_mixed_transform(int r, int n) {
  check_args(r, n);
  if (r < 2) {
    throw Error(ErrorKind::UnsupportedModulus,
                "the mixed binomial transform needs r >= 2; use d_formula for r = 1");
  }
  // Classical derangement numbers d_i = (i-1)(d_{i-1} + d_{i-2}).
  std::vector<Integer> classical(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (i == 0) classical[i] = 1;
    else if (i == 1) classical[i] = 0;
    else classical[i] = (i - 1) * (classical[i - 1] + classical[i - 2]);
  }
  Integer total = 0;
  for (int i = 0; i <= n; ++i) {
    total += binomial(n, i) * power(Integer(r), static_cast<unsigned>(i)) *
             power(Integer(r - 1), static_cast<unsigned>(n - i)) * classical[i];
  }
  return total;
}

Integer d_bruteforce(int r, int n, std::uint64_t bound) {
  std::uint64_t count = 0;
  for (const CyclicPermutation& sigma : enumerate_derangements(r, n, bound)) {
    (void)sigma;
    ++count;
  }
  return Integer(static_cast<unsigned long>(count));
}

Integer fixed_point_count(int r, int n, int k) {
  check_args(r, n);
  if (k < 0 || k > n) throw Error(ErrorKind::InvalidArgument, "k must lie in 0..n");
  return binomial(n, k) * count_table(r, n - k, CountMethod::OneTerm)[n - k];
}

ProbabilityBound probability_bound(int r, int n) {
  check_args(r, n);
  ProbabilityBound out;
  out.ratio = Rational(d_formula(r, n), group_order(r, n));
  out.ratio.canonicalize();

  // Alternating partial sums of exp(-1/r): odd-length cut-offs bracket from
  // below, even from above, since the terms shrink for 1/r <= 1.
  const int terms = n + 16;
  Rational partial = 0;
  Rational term = 1;
  out.limit_lower = 0;
  out.limit_upper = 0;
  for (int i = 0; i <= terms + 1; ++i) {
    if (i > 0) term = -term / Rational(r * i);
    partial += term;
    if (i == terms) (i % 2 == 0 ? out.limit_upper : out.limit_lower) = partial;
    if (i == terms + 1) (i % 2 == 0 ? out.limit_upper : out.limit_lower) = partial;
  }

  Rational e_lower = 0;
  Rational inverse_factorial = 1;
  for (int k = 0; k <= 20; ++k) {
    if (k > 0) inverse_factorial /= k;
    e_lower += inverse_factorial;
  }
  out.tolerance = e_lower / Rational(power(Integer(r), static_cast<unsigned>(n + 1)) * factorial(n + 1));

  const Rational gap_low = abs(out.ratio - out.limit_lower);
  const Rational gap_high = abs(out.ratio - out.limit_upper);
  out.holds = std::max(gap_low, gap_high) < out.tolerance;
  return out;
}

BivariatePolynomial qt_formula(int r, int n) {
  check_args(r, n);
  const BivariatePolynomial bracket = t_bracket(r);
  BivariatePolynomial total;
  for (int i = 0; i <= n; ++i) {
    BivariatePolynomial term = BivariatePolynomial::monomial(i * (i - 1) / 2, 0, i % 2 == 0 ? 1 : -1) *
                               pow(bracket, static_cast<unsigned>(n - i)) * q_factorial_ratio(n, i);
    total += term;
  }
  return total;
}

BivariatePolynomial qt_two_term(int r, int n) {
  check_args(r, n);
  const BivariatePolynomial bracket = t_bracket(r);
  BivariatePolynomial older = 1;
  if (n == 0) return older;
  BivariatePolynomial previous = bracket - BivariatePolynomial(1);
  for (int m = 2; m <= n; ++m) {
    const BivariatePolynomial q_shift = BivariatePolynomial::monomial(m - 1, 0);
    BivariatePolynomial next = (bracket * q_integer(m) - q_shift) * previous +
                               q_shift * bracket * q_integer(m - 1) * older;
    older = std::move(previous);
    previous = std::move(next);
  }
  return previous;
}

BivariatePolynomial qt_one_term(int r, int n) {
  check_args(r, n);
  const BivariatePolynomial bracket = t_bracket(r);
  BivariatePolynomial value = 1;
  for (int m = 1; m <= n; ++m) {
    value = bracket * q_integer(m) * value +
            BivariatePolynomial::monomial(m * (m - 1) / 2, 0, m % 2 == 0 ? 1 : -1);
  }
  return value;
}

BivariatePolynomial maj_sgn_distribution(int r, int n, bool derangements_only, OrderVariant order,
                                         std::uint64_t bound) {
  check_args(r, n);
  Histogram histogram(max_maj(n), n * (r - 1));
  auto range = derangements_only ? enumerate_derangements(r, n, bound) : enumerate_group(r, n, bound);
  for (const CyclicPermutation& sigma : range) {
    histogram.add(maj(sigma.letters(), order), sgn(sigma.letters()));
  }
  return histogram.polynomial();
}

BivariatePolynomial qt_bruteforce(int r, int n, OrderVariant order, std::uint64_t bound) {
  return maj_sgn_distribution(r, n, true, order, bound);
}

BivariatePolynomial group_total_qt(int r, int n) {
  check_args(r, n);
  return pow(t_bracket(r), static_cast<unsigned>(n)) * q_factorial(n);
}

BivariatePolynomial group_total_qt_bruteforce(int r, int n, OrderVariant order, std::uint64_t bound) {
  return maj_sgn_distribution(r, n, false, order, bound);
}

BivariatePolynomial gessel_bruteforce(int n) {
  check_args(1, n);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  Histogram histogram(max_maj(n), 0);
  do {
    bool deranged = true;
    for (int i = 0; i < n; ++i) deranged = deranged && p[i] != i + 1;
    if (!deranged) continue;
    int major = 0;
    for (int i = 0; i + 1 < n; ++i) {
      if (p[i] > p[i + 1]) major += i + 1;
    }
    histogram.add(major, 0);
  } while (std::next_permutation(p.begin(), p.end()));
  return histogram.polynomial();
}

BivariatePolynomial eulerian_poly(int r, int n, EulerianRoute route, std::uint64_t bound) {
  check_args(r, n);
  Histogram histogram(n, 0);
  for (const CyclicPermutation& sigma : enumerate_group(r, n, bound)) {
    const int degree = route == EulerianRoute::NonDescents ? n - des(sigma.letters())
                                                           : weak_excedance_count(sigma);
    histogram.add(degree, 0);
  }
  return histogram.polynomial();
}

std::vector<BivariatePolynomial> exc_derangement_table(int r, int max_n) {
  check_args(r, max_n);
  const BivariatePolynomial q = BivariatePolynomial::q();
  const BivariatePolynomial rq_one_minus_q = BivariatePolynomial(r) * q * (BivariatePolynomial(1) - q);
  std::vector<BivariatePolynomial> table;
  table.reserve(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    if (n == 0) table.emplace_back(1);
    else if (n == 1) table.emplace_back(r - 1);
    else {
      const BivariatePolynomial& previous = table[n - 1];
      table.push_back(BivariatePolynomial((n - 1) * r) * q * (previous + table[n - 2]) +
                      BivariatePolynomial(r - 1) * previous + rq_one_minus_q * previous.derivative_q());
    }
  }
  return table;
}

BivariatePolynomial exc_derangement_poly(int r, int n) { return exc_derangement_table(r, n)[n]; }

BivariatePolynomial exc_derangement_bruteforce(int r, int n, std::uint64_t bound) {
  Histogram histogram(n, 0);
  for (const CyclicPermutation& sigma : enumerate_derangements(r, n, bound)) {
    histogram.add(weak_excedance_count(sigma), 0);
  }
  return histogram.polynomial();
}

BivariatePolynomial eulerian_from_exc(int r, int n) {
  const std::vector<BivariatePolynomial> table = exc_derangement_table(r, n);
  BivariatePolynomial total;
  for (int k = 0; k <= n; ++k) {
    total += BivariatePolynomial::monomial(k, 0, binomial(n, k)) * table[n - k];
  }
  return total;
}

}  // namespace wreath
