#include "wreath/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "wreath/counting.hpp"
#include "wreath/error.hpp"

namespace wreath {

namespace {

void require_nonzero(const QPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no root structure");
}

int sign_at_infinity(const QPolynomial& p, bool positive) {
  int s = sgn(p.leading());
  if (!positive && p.degree() % 2 == 1) s = -s;
  return s;
}

int variations(const SturmChain& chain, const std::optional<Rational>& x, bool positive_infinity) {
  int count = 0;
  int last = 0;
  for (const QPolynomial& f : chain.sequence) {
    const int s = x ? f.sign_at(*x) : sign_at_infinity(f, positive_infinity);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

QPolynomial squarefree_part(const QPolynomial& p) {
  const QPolynomial g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return divmod(p, g).first;
}

/// Roots strictly inside (a, b).
int open_count(const QPolynomial& p, const SturmChain& chain, const Rational& a, const Rational& b) {
  return count_roots(chain, a, b) - (p.sign_at(b) == 0 ? 1 : 0);
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    if (d != m / d) out.push_back(m / d);
  }
  return out;
}

constexpr std::uint64_t kFactorLimit = 1'000'000'000'000ULL;

Rational cauchy_bound(const QPolynomial& p) {
  Rational largest(0);
  const Rational lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational ratio = abs(p.coefficient(i) / lead);
    if (ratio > largest) largest = ratio;
  }
  return largest + 1;
}

Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

class Isolator {
 public:
  Isolator(const QPolynomial& p, const Rational& tolerance)
      : p_(p), chain_(sturm_chain(p)), tolerance_(tolerance) {}

  void run(const Rational& a, const Rational& b) {
    const int k = open_count(p_, chain_, a, b);
    split(a, b, k);
  }

  std::vector<RootInterval> take() { return std::move(found_); }

 private:
  void split(const Rational& a, const Rational& b, int k) {
    if (k == 0) return;
    if (k == 1 && b - a <= tolerance_) {
      found_.push_back({a, b});
      return;
    }
    const Rational m = midpoint(a, b);
    const int left = open_count(p_, chain_, a, m);
    const bool hit = p_.sign_at(m) == 0;
    if (hit) found_.push_back({m, m});
    split(a, m, left);
    split(m, b, k - left - (hit ? 1 : 0));
  }

  QPolynomial p_;
  SturmChain chain_;
  Rational tolerance_;
  std::vector<RootInterval> found_;
};

bool before(const RootInterval& a, const RootInterval& b) { return a.upper <= b.lower; }

}  // namespace

Rational default_root_tolerance() {
  Rational t(1);
  mpz_mul_2exp(t.get_den_mpz_t(), t.get_den_mpz_t(), 40);
  return t;
}

SturmChain sturm_chain(const QPolynomial& p) {
  require_nonzero(p);
  SturmChain chain;
  chain.sequence.push_back(p);
  if (p.degree() >= 1) {
    chain.sequence.push_back(p.derivative());
    for (;;) {
      const std::size_t n = chain.sequence.size();
      QPolynomial next = -divmod(chain.sequence[n - 2], chain.sequence[n - 1]).second;
      if (next.is_zero()) break;
      chain.sequence.push_back(std::move(next));
    }
  }
  chain.squarefree = chain.sequence.back().degree() == 0;
  return chain;
}

int count_roots(const SturmChain& chain, const std::optional<Rational>& lower,
                const std::optional<Rational>& upper) {
  if (!chain.squarefree) {
    throw Error(ErrorKind::NotSquarefree, "polynomial has a repeated root; Sturm counts need squarefree input");
  }
  if (lower && upper && *lower >= *upper) {
    throw Error(ErrorKind::InvalidArgument, "root-count interval is empty");
  }
  return variations(chain, lower, false) - variations(chain, upper, true);
}

int count_roots(const QPolynomial& p, const std::optional<Rational>& lower, const std::optional<Rational>& upper) {
  return count_roots(sturm_chain(p), lower, upper);
}

std::vector<Rational> rational_roots(const QPolynomial& p) {
  require_nonzero(p);
  Integer common(1);
  for (const Rational& c : p.coefficients()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> c;
  for (const Rational& x : p.coefficients()) c.push_back(Integer(x * common));

  std::vector<Rational> roots;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  if (low + 1 == c.size()) return roots;

  const Integer a0 = abs(c[low]);
  const Integer an = abs(c.back());
  if (a0 > kFactorLimit || an > kFactorLimit) return roots;

  std::set<Rational> candidates;
  for (std::uint64_t num : divisors(a0.get_ui())) {
    for (std::uint64_t den : divisors(an.get_ui())) {
      Rational x{Integer(static_cast<unsigned long>(num)), Integer(static_cast<unsigned long>(den))};
      x.canonicalize();
      candidates.insert(x);
      candidates.insert(Rational(-x));
    }
  }
  for (const Rational& x : candidates) {
    if (p.sign_at(x) == 0) roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rational> RootIsolation::exact_roots() const {
  std::vector<Rational> out;
  for (const RootInterval& r : roots) {
    if (r.exact()) out.push_back(r.lower);
  }
  return out;
}

RootIsolation isolate_roots(const QPolynomial& p, const Rational& tolerance) {
  require_nonzero(p);
  if (tolerance <= 0) throw Error(ErrorKind::InvalidArgument, "root tolerance must be positive");
  RootIsolation out;
  out.polynomial = p;
  const QPolynomial work = squarefree_part(p);
  out.squarefree = work.degree() == p.degree();
  if (work.degree() <= 0) return out;

  const std::vector<Rational> exact = rational_roots(work);
  const Rational bound = cauchy_bound(work);
  std::vector<Rational> breaks{-bound};
  breaks.insert(breaks.end(), exact.begin(), exact.end());
  breaks.push_back(bound);

  Isolator isolator(work, tolerance);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) isolator.run(breaks[i], breaks[i + 1]);
  out.roots = isolator.take();
  for (const Rational& x : exact) out.roots.push_back({x, x});
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lower < b.lower; });
  return out;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

RootReport verify_negative_distinct(const QPolynomial& p, const Rational& tolerance) {
  RootReport report;
  report.isolation = isolate_roots(p, tolerance);
  report.degree = p.degree();
  report.squarefree = report.isolation.squarefree;
  report.real_roots = report.isolation.real_root_count();
  const QPolynomial work = squarefree_part(p);
  if (work.degree() >= 1) {
    report.negative_roots = count_roots(work, std::nullopt, Rational(0)) - (work.sign_at(0) == 0 ? 1 : 0);
  }

  const std::string of_degree = " of degree " + std::to_string(report.degree);
  if (!report.squarefree) {
    report.reason = "repeated root: only " + std::to_string(report.real_roots) + " distinct real roots" + of_degree;
  } else if (report.real_roots != report.degree) {
    report.reason = std::to_string(report.real_roots) + " real roots" + of_degree;
  } else if (report.negative_roots != report.degree) {
    report.reason = std::to_string(report.negative_roots) + " negative roots" + of_degree;
  } else {
    report.verdict = Verdict::Pass;
  }
  return report;
}

InterlacingReport verify_interlacing(const QPolynomial& p_small, const QPolynomial& p_large,
                                     const Rational& tolerance, int max_refinements) {
  InterlacingReport report;
  const RootReport small = verify_negative_distinct(p_small, tolerance);
  const RootReport large = verify_negative_distinct(p_large, tolerance);
  report.small = small.isolation;
  report.large = large.isolation;

  if (p_large.degree() != p_small.degree() + 1) {
    report.reason = "degrees " + std::to_string(p_small.degree()) + " and " + std::to_string(p_large.degree()) +
                    " do not differ by one";
    return report;
  }
  if (small.verdict != Verdict::Pass) {
    report.reason = "smaller polynomial: " + small.reason;
    return report;
  }
  if (large.verdict != Verdict::Pass) {
    report.reason = "larger polynomial: " + large.reason;
    return report;
  }
  if (gcd(p_small, p_large).degree() > 0) {
    report.reason = "the polynomials share a root";
    return report;
  }

  struct Item {
    RootInterval interval;
    char tag;
  };
  std::vector<Item> items;
  for (const RootInterval& r : report.small.roots) items.push_back({r, 'S'});
  for (const RootInterval& r : report.large.roots) items.push_back({r, 'L'});
  const SturmChain small_chain = sturm_chain(p_small);
  const SturmChain large_chain = sturm_chain(p_large);

  auto refine = [&](Item& item) {
    if (item.interval.exact()) return;
    const QPolynomial& p = item.tag == 'S' ? p_small : p_large;
    const SturmChain& chain = item.tag == 'S' ? small_chain : large_chain;
    const Rational m = midpoint(item.interval.lower, item.interval.upper);
    if (p.sign_at(m) == 0) {
      item.interval = {m, m};
    } else if (open_count(p, chain, item.interval.lower, m) == 1) {
      item.interval.upper = m;
    } else {
      item.interval.lower = m;
    }
  };

  int refinements = 0;
  for (;;) {
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      return a.interval.lower < b.interval.lower ||
             (a.interval.lower == b.interval.lower && a.interval.upper < b.interval.upper);
    });
    bool separated = true;
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      if (before(items[i].interval, items[i + 1].interval)) continue;
      separated = false;
      refine(items[i]);
      refine(items[i + 1]);
    }
    if (separated) break;
    if (++refinements > max_refinements) {
      report.verdict = Verdict::Inconclusive;
      report.reason = "root intervals still overlap after maximum refinement";
      return report;
    }
  }

  for (const Item& item : items) report.pattern.push_back(item.tag);
  std::string expected = "L";
  for (int i = 0; i < p_small.degree(); ++i) expected += "SL";
  if (report.pattern == expected) {
    report.verdict = Verdict::Pass;
  } else {
    report.reason = "roots do not alternate: " + report.pattern;
  }
  return report;
}

bool log_concave(const std::vector<Integer>& c) {
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
  }
  return true;
}

bool unimodal(const std::vector<Integer>& c) {
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

QPolynomial root_theorem_polynomial(int r, int n) {
  if (r == 1 && n < 2) throw Error(ErrorKind::InvalidSize, "D_n for r = 1 needs n >= 2");
  QPolynomial p = QPolynomial::from(exc_derangement_poly(r, n));
  if (r == 1) p = divmod(p, QPolynomial::q()).first;
  return p;
}

bool RootTheoremCell::passed() const noexcept {
  return roots.verdict == Verdict::Pass && interlacing_with_next.verdict == Verdict::Pass && log_concave &&
         unimodal && extreme_coefficients;
}

RootTheoremCell root_theorem_cell(int r, int n, const Rational& tolerance) {
  RootTheoremCell cell;
  cell.modulus = r;
  cell.size = n;
  const QPolynomial p = root_theorem_polynomial(r, n);
  cell.polynomial = exc_derangement_poly(r, n);
  cell.roots = verify_negative_distinct(p, tolerance);
  cell.interlacing_with_next = verify_interlacing(p, root_theorem_polynomial(r, n + 1), tolerance);
  const std::vector<Integer> coefficients = cell.polynomial.q_coefficients();
  cell.log_concave = log_concave(coefficients);
  cell.unimodal = unimodal(coefficients);
  cell.extreme_coefficients =
      cell.polynomial.coefficient(cell.polynomial.q_degree()) == power(Integer(r), n) &&
      cell.polynomial.coefficient(0) == power(Integer(r - 1), n);
  return cell;
}

namespace {

nlohmann::json intervals_json(const RootIsolation& isolation) {
  nlohmann::json out = nlohmann::json::array();
  for (const RootInterval& r : isolation.roots) {
    out.push_back({fraction_string(r.lower), fraction_string(r.upper)});
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const RootReport& report) {
  nlohmann::json exact = nlohmann::json::array();
  for (const Rational& x : report.isolation.exact_roots()) exact.push_back(fraction_string(x));
  return {
      {"degree", report.degree},
      {"real_roots", report.real_roots},
      {"negative_roots", report.negative_roots},
      {"squarefree", report.squarefree},
      {"intervals", intervals_json(report.isolation)},
      {"exact_roots", exact},
      {"verdicts", {{"negative_distinct", to_string(report.verdict)}}},
      {"reason", report.reason},
  };
}

nlohmann::json to_json(const InterlacingReport& report) {
  return {
      {"verdict", to_string(report.verdict)},
      {"reason", report.reason},
      {"pattern", report.pattern},
      {"small_intervals", intervals_json(report.small)},
      {"large_intervals", intervals_json(report.large)},
  };
}

nlohmann::json to_json(const RootTheoremCell& cell) {
  nlohmann::json roots = to_json(cell.roots);
  roots["verdicts"]["interlacing_with_next"] = to_string(cell.interlacing_with_next.verdict);
  roots["verdicts"]["log_concave"] = cell.log_concave;
  roots["verdicts"]["unimodal"] = cell.unimodal;
  roots["verdicts"]["extreme_coefficients"] = cell.extreme_coefficients;
  return {
      {"r", cell.modulus},
      {"n", cell.size},
      {"polynomial", cell.polynomial.to_string()},
      {"roots", roots},
      {"interlacing_with_next", to_json(cell.interlacing_with_next)},
      {"pass", cell.passed()},
  };
}

}  // namespace wreath
