// Acceptance runner: one PASS/FAIL line per criterion.
//   wreath_acceptance [--criterion k]
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wreath/algebra/qanalog.hpp"
#include "wreath/analysis.hpp"
#include "wreath/bijections.hpp"
#include "wreath/counting.hpp"
#include "wreath/enumerate.hpp"
#include "wreath/generating.hpp"
#include "wreath/published_table.hpp"

using namespace wreath;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    else if (detail.size() < 400) detail += "; " + what;
    pass = false;
  }
};

std::string cell(int r, int n) { return "(r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")"; }

Outcome table_reproduction() {
  Outcome o;
  int matched = 0;
  for (int r = 1; r <= kPublishedMaxModulus; ++r) {
    for (int n = 0; n <= kPublishedMaxSize; ++n) {
      if (r == 3 && n == 2) continue;
      if (d_formula(r, n) == published_value(r, n)) ++matched;
      else o.require(false, "mismatch at " + cell(r, n));
    }
  }
  o.require(matched == 34, "matched " + std::to_string(matched) + " of 34 cells");
  const auto discrepancies = published_discrepancies();
  o.require(discrepancies.size() == 1 && discrepancies[0].modulus == 3 && discrepancies[0].size == 2 &&
                discrepancies[0].printed == 12 && discrepancies[0].computed == 13,
            "expected exactly the (3,2) discrepancy");
  o.require(d_two_term(3, 2) == 13 && d_one_term(3, 2) == 13 && d_mixed_transform(3, 2) == 13,
            "routes disagree at (3,2)");
  o.require(group_order(3, 2) == 18, "group order at (3,2)");
  o.require(d_bruteforce(3, 2) == 13, "enumeration at (3,2)");
  if (o.pass) o.detail = "34 cells match; (r=3, n=2) printed 12, every route and enumeration over 18 elements give 13";
  return o;
}

Outcome four_way_counts() {
  Outcome o;
  int cells = 0;
  for (int r = 1; r <= 10; ++r) {
    for (int n = 0; group_order(r, n) <= 1'000'000; ++n) {
      const Integer d = d_formula(r, n);
      o.require(d_two_term(r, n) == d, "two-term " + cell(r, n));
      o.require(d_one_term(r, n) == d, "one-term " + cell(r, n));
      if (r >= 2) o.require(d_mixed_transform(r, n) == d, "transform " + cell(r, n));
      o.require(d_bruteforce(r, n, 1'000'000) == d, "enumeration " + cell(r, n));
      ++cells;
    }
  }
  if (o.pass) o.detail = std::to_string(cells) + " cells with r <= 10 and r^n n! <= 10^6 agree";
  return o;
}

Outcome group_qt() {
  Outcome o;
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 5; ++n) {
      o.require(group_total_qt_bruteforce(r, n) == pow(t_bracket(r), n) * q_factorial(n), "mismatch " + cell(r, n));
    }
  }
  if (o.pass) o.detail = "r <= 3, n <= 5";
  return o;
}

Outcome qt_derangements() {
  Outcome o;
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 5; ++n) {
      const BivariatePolynomial f = qt_formula(r, n);
      o.require(qt_two_term(r, n) == f, "two-term " + cell(r, n));
      o.require(qt_one_term(r, n) == f, "one-term " + cell(r, n));
      o.require(qt_bruteforce(r, n) == f, "enumeration " + cell(r, n));
      o.require(f.evaluate(1, 1) == Rational(d_formula(r, n)), "q=t=1 " + cell(r, n));
      if (r == 1) o.require(f.at_t_one() == gessel_bruteforce(n), "classical derangements n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "four routes agree for r <= 3, n <= 5; r=1 matches classical derangements; q=t=1 gives d_n";
  return o;
}

Outcome fibers() {
  Outcome o;
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 5; ++n) {
      const FiberReport report = check_fibers(r, n);
      o.require(report.passed(), cell(r, n) + " " + report.example);
    }
  }
  if (o.pass) o.detail = "every fiber for r <= 3, n <= 5";
  return o;
}

Outcome shuffle_identity() {
  Outcome o;
  std::uint64_t pairs = 0;
  const std::uint64_t bound = 200'000'000;
  for (int r = 1; r <= 3; ++r) {
    const int max_total = r <= 2 ? 7 : 5;
    for (int total = 0; total <= max_total; ++total) {
      const ShuffleReport report = check_shuffle_identity(r, total, bound);
      o.require(report.passed(), "r=" + std::to_string(r) + " a+b=" + std::to_string(total) + " " + report.example);
      pairs += report.pairs;
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs: a+b <= 7 for r in {1,2}, a+b <= 5 for r = 3";
  return o;
}

Outcome eulerian() {
  Outcome o;
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 5; ++n) {
      const BivariatePolynomial a = eulerian_poly(r, n, EulerianRoute::NonDescents);
      o.require(eulerian_poly(r, n, EulerianRoute::WeakExcedances) == a, "equidistribution " + cell(r, n));
      o.require(eulerian_from_exc(r, n) == a, "binomial convolution " + cell(r, n));
      if (r <= 2) o.require(is_palindromic(a), "palindromic " + cell(r, n));
    }
  }
  o.require(!is_palindromic(eulerian_poly(3, 1, EulerianRoute::NonDescents)), "(r=3, n=1) should not be palindromic");
  if (o.pass) o.detail = "r <= 3, n <= 5; palindromic for r in {1,2}; (r=3, n=1) is not";
  return o;
}

Outcome generating_functions() {
  Outcome o;
  std::map<std::string, int> failing;
  for (int r = 1; r <= 3; ++r) {
    for (const EgfReport& report :
         {egf_check_derangements(r, 7), egf_check_eulerian(r, 7), egf_check_exc_derangements(r, 7)}) {
      for (const EgfRow& row : report.rows) {
        if (row.pass) continue;
        ++failing[report.series + " r=" + std::to_string(r)];
        std::ostringstream what;
        what << report.series << " " << cell(r, row.n) << " expected " << row.expected << " got " << row.actual;
        if (!row.note.empty()) what << " [" << row.note << "]";
        o.require(false, what.str());
      }
    }
  }
  if (o.pass) {
    o.detail = "n <= 7, r <= 3";
  } else {
    std::string summary = "mismatching rows:";
    for (const auto& [series, count] : failing) summary += " " + series + " x" + std::to_string(count) + ",";
    summary.back() = ';';
    o.detail = summary + " first: " + o.detail;
  }
  return o;
}

Outcome roots() {
  Outcome o;
  for (int r = 1; r <= 4; ++r) {
    for (int n = 2; n <= 8; ++n) {
      const RootTheoremCell c = root_theorem_cell(r, n);
      o.require(c.passed(), cell(r, n) + " " + c.roots.reason + " " + c.interlacing_with_next.reason);
    }
  }
  if (o.pass) o.detail = "28 cells, distinct negative roots, interlacing, log-concave, unimodal";
  return o;
}

Outcome order_invariance() {
  Outcome o;
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 4; ++n) {
      for (bool derangements_only : {false, true}) {
        o.require(maj_sgn_distribution(r, n, derangements_only, OrderVariant::Standard) ==
                      maj_sgn_distribution(r, n, derangements_only, OrderVariant::Alternate),
                  cell(r, n) + (derangements_only ? " derangements" : " group"));
      }
    }
  }
  if (o.pass) o.detail = "group and derangements, r <= 3, n <= 4";
  return o;
}

Outcome probability() {
  Outcome o;
  for (int r = 1; r <= 5; ++r) {
    for (int n = 0; n <= 8; ++n) o.require(probability_bound(r, n).holds, cell(r, n));
  }
  if (o.pass) o.detail = "r <= 5, n <= 8 with rational brackets";
  return o;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
  double time_limit_seconds;  // 0 for none
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"published table reproduction", table_reproduction, 1.0},
      {"four-way count agreement", four_way_counts, 0},
      {"group maj/sgn distribution", group_qt, 0},
      {"(q,t)-derangement routes", qt_derangements, 0},
      {"fixed-point fibers", fibers, 0},
      {"shuffle identity", shuffle_identity, 0},
      {"Eulerian identities", eulerian, 0},
      {"exponential generating functions", generating_functions, 0},
      {"real roots and interlacing", roots, 30.0},
      {"letter-order invariance", order_invariance, 0},
      {"derangement probability bound", probability, 0},
  };
  return all;
}

bool run_one(int k) {
  const Criterion& c = criteria()[k - 1];
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = c.run();
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.time_limit_seconds > 0 && seconds >= c.time_limit_seconds) {
    outcome.require(false, "took " + std::to_string(seconds) + " s");
  }
  std::cout << "criterion " << k << ": " << (outcome.pass ? "PASS" : "FAIL") << " " << c.title << " ("
            << static_cast<int>(seconds * 1000) << " ms) " << outcome.detail << std::endl;
  return outcome.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const int count = static_cast<int>(criteria().size());
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
    const int k = std::atoi(argv[2]);
    if (k < 1 || k > count) {
      std::cerr << "criterion must be 1.." << count << "\n";
      return 2;
    }
    return run_one(k) ? 0 : 1;
  }
  if (argc != 1) {
    std::cerr << "usage: wreath_acceptance [--criterion k]\n";
    return 2;
  }
  int failed = 0;
  for (int k = 1; k <= count; ++k) failed += run_one(k) ? 0 : 1;
  std::cout << (count - failed) << " of " << count << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
