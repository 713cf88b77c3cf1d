#include "wreath/cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "wreath/analysis.hpp"
#include "wreath/bijections.hpp"
#include "wreath/counting.hpp"
#include "wreath/error.hpp"
#include "wreath/generating.hpp"

namespace wreath::cli {

namespace {

using nlohmann::json;

class Collector {
 public:
  Collector(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  /// Runs `body`, which returns the detail text on failure or "" on pass.
  /// Enumeration refusals become Skipped; other library errors are failures.
  void check(const std::string& identity, const std::string& statement, int r, int n,
             const std::function<std::string()>& body) {
    CheckResult result{suite_, identity, statement, r, n, CheckStatus::Fail, {}};
    try {
      result.detail = body();
      result.status = result.detail.empty() ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (const EnumerationRefused& e) {
      result.status = CheckStatus::Skipped;
      result.detail = e.what();
    } catch (const Error& e) {
      result.detail = e.what();
    }
    out_.push_back(std::move(result));
  }

  void add(CheckResult result) {
    result.suite = suite_;
    out_.push_back(std::move(result));
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

std::string mismatch(const std::string& what, const std::string& a, const std::string& b) {
  return what + ": " + a + " vs " + b;
}

std::string compare(const std::string& what, const BivariatePolynomial& a, const BivariatePolynomial& b) {
  return a == b ? "" : mismatch(what, a.to_string(), b.to_string());
}

std::string compare(const std::string& what, const Integer& a, const Integer& b) {
  return a == b ? "" : mismatch(what, a.get_str(), b.get_str());
}

std::string first_failure(std::initializer_list<std::string> parts) {
  for (const std::string& p : parts) {
    if (!p.empty()) return p;
  }
  return "";
}

void counts_suite(const RunConfig& config, std::vector<CheckResult>& out, std::vector<TableDiscrepancy>& found) {
  Collector c("counts", out);
  for (int r : config.r.values()) {
    for (int n : config.n.values()) {
      c.check("routes", "closed formula, two-term recurrence, one-term recurrence and mixed transform agree", r, n,
              [&] {
                const Integer d = d_formula(r, n);
                return first_failure({compare("two-term", d, d_two_term(r, n)),
                                      compare("one-term", d, d_one_term(r, n)),
                                      r >= 2 ? compare("transform", d, d_mixed_transform(r, n)) : ""});
              });
      c.check("bruteforce", "closed formula equals the number of enumerated derangements", r, n,
              [&] { return compare("enumeration", d_formula(r, n), d_bruteforce(r, n, config.bound)); });
      c.check("fixed_points", "elements with k fixed points number C(n,k) d_{n-k} and sum to r^n n!", r, n, [&] {
        Integer total(0);
        for (int k = 0; k <= n; ++k) total += fixed_point_count(r, n, k);
        return first_failure({compare("k = 0", fixed_point_count(r, n, 0), d_formula(r, n)),
                              compare("sum", total, group_order(r, n))});
      });
      c.check("probability_bound", "|d_n/(r^n n!) - e^{-1/r}| < e/(r^{n+1} (n+1)!)", r, n, [&] {
        const ProbabilityBound b = probability_bound(r, n);
        return b.holds ? "" : "ratio " + fraction_string(b.ratio) + " outside tolerance";
      });

      if (r <= kPublishedMaxModulus && n <= kPublishedMaxSize) {
        CheckResult result{"", "published_table", "printed table value equals the computed count", r, n,
                           CheckStatus::Pass, {}};
        const Integer printed = published_value(r, n);
        const Integer computed = d_formula(r, n);
        if (printed != computed) {
          const bool routes_agree = computed == d_two_term(r, n) && computed == d_one_term(r, n) &&
                                    (r < 2 || computed == d_mixed_transform(r, n));
          result.status = routes_agree ? CheckStatus::Discrepancy : CheckStatus::Fail;
          result.detail = "printed " + printed.get_str() + ", computed " + computed.get_str();
          if (routes_agree) found.push_back({r, n, printed, computed});
        }
        c.add(std::move(result));
      }
    }
  }
}

void qt_suite(const RunConfig& config, std::vector<CheckResult>& out) {
  Collector c("qt", out);
  for (int r : config.r.values()) {
    for (int n : config.n.values()) {
      c.check("recurrences", "(q,t) formula, two-term and one-term recurrences agree", r, n, [&] {
        const BivariatePolynomial p = qt_formula(r, n);
        return first_failure({compare("two-term", p, qt_two_term(r, n)), compare("one-term", p, qt_one_term(r, n))});
      });
      c.check("bruteforce", "(q,t) formula equals sum of q^maj t^sgn over derangements", r, n,
              [&] { return compare("enumeration", qt_formula(r, n), qt_bruteforce(r, n, config.order, config.bound)); });
      c.check("group_total", "sum of q^maj t^sgn over the group is [r]_t^n [n]_q!", r, n, [&] {
        return compare("enumeration", group_total_qt(r, n),
                       group_total_qt_bruteforce(r, n, config.order, config.bound));
      });
      c.check("specialization", "q = t = 1 gives d_n; for r = 1, t = 1 gives the q-derangement polynomial", r, n,
              [&] {
                const BivariatePolynomial p = qt_formula(r, n);
                std::string result = compare("q=t=1", Integer(p.evaluate(1, 1)), d_formula(r, n));
                if (result.empty() && r == 1) result = compare("t=1", p.at_t_one(), gessel_bruteforce(n));
                return result;
              });
      c.check("order_invariance", "(maj, sgn) distribution is the same under both total orders", r, n, [&] {
        return first_failure(
            {compare("group", maj_sgn_distribution(r, n, false, OrderVariant::Standard, config.bound),
                     maj_sgn_distribution(r, n, false, OrderVariant::Alternate, config.bound)),
             compare("derangements", maj_sgn_distribution(r, n, true, OrderVariant::Standard, config.bound),
                     maj_sgn_distribution(r, n, true, OrderVariant::Alternate, config.bound))});
      });
    }
  }
}

void bijections_suite(const RunConfig& config, std::vector<CheckResult>& out) {
  Collector c("bijections", out);
  for (int r : config.r.values()) {
    for (int n : config.n.values()) {
      c.check("fibers", "dp fibers have C(n,k) elements and phi maps each onto a shuffle set, keeping Des and sgn",
              r, n, [&] {
                const FiberReport report = check_fibers(r, n, config.bound);
                return report.passed() ? "" : report.example.empty() ? "count mismatch" : report.example;
              });
      c.check("shuffles", "shuffle generating function is the q-binomial times q^{maj a + maj b} t^{sgn a + sgn b}",
              r, n, [&] {
                const ShuffleReport report = check_shuffle_identity(r, n, config.bound);
                return report.passed() ? "" : std::to_string(report.failures) + " pairs fail, e.g. " + report.example;
              });
    }
  }
}

void eulerian_suite(const RunConfig& config, std::vector<CheckResult>& out) {
  Collector c("eulerian", out);
  for (int r : config.r.values()) {
    for (int n : config.n.values()) {
      c.check("equidistribution", "n - des and exc are equidistributed over the group", r, n, [&] {
        return compare("exc", eulerian_poly(r, n, EulerianRoute::NonDescents, config.bound),
                       eulerian_poly(r, n, EulerianRoute::WeakExcedances, config.bound));
      });
      c.check("binomial_convolution", "A_n = sum_k C(n,k) q^k D_{n-k}", r, n, [&] {
        return compare("convolution", eulerian_poly(r, n, EulerianRoute::NonDescents, config.bound),
                       eulerian_from_exc(r, n));
      });
      c.check("palindromic", "A_n has a symmetric coefficient sequence exactly when r <= 2 or n = 0", r, n, [&] {
        const bool symmetric = is_palindromic(eulerian_from_exc(r, n));
        const bool expected = r <= 2 || n == 0;
        return symmetric == expected ? "" : std::string(symmetric ? "unexpectedly symmetric" : "not symmetric");
      });
      c.check("exc_recurrence", "D_n recurrence equals sum of q^exc over derangements", r, n, [&] {
        return compare("enumeration", exc_derangement_poly(r, n), exc_derangement_bruteforce(r, n, config.bound));
      });
      c.check("exc_total", "D_n(1) = d_n", r, n, [&] {
        return compare("q=1", Integer(exc_derangement_poly(r, n).evaluate(1, 1)), d_formula(r, n));
      });
    }
  }
}

void egf_suite(const RunConfig& config, std::vector<CheckResult>& out) {
  Collector c("egf", out);
  const int order = config.n.last;
  for (int r : config.r.values()) {
    const EgfReport reports[] = {egf_check_derangements(r, order), egf_check_eulerian(r, order),
                                 egf_check_exc_derangements(r, order)};
    const char* statements[] = {"n! [x^n] e^{-x}/(1-rx) = d_n",
                                "n! [x^n] (1-q)e^{x(1-q)}/(1-qe^{rx(1-q)}) = A_n(q)",
                                "n! [x^n] (1-q)e^{x(r-1)}/(e^{qrx}-qe^{rx}) = D_n(q)"};
    for (int i = 0; i < 3; ++i) {
      for (const EgfRow& row : reports[i].rows) {
        if (row.n < config.n.first) continue;
        CheckResult result{"", reports[i].series, statements[i], r, row.n,
                           row.pass ? CheckStatus::Pass : CheckStatus::Fail, {}};
        if (!row.pass) {
          result.detail = mismatch("coefficient", row.actual, row.expected);
          if (!row.note.empty()) result.detail += " (" + row.note + ")";
        }
        c.add(std::move(result));
      }
    }
  }
}

void roots_suite(const RunConfig& config, std::vector<CheckResult>& out) {
  Collector c("roots", out);
  for (int r : config.r.values()) {
    for (int n : config.n.values()) {
      if (n < 2) continue;
      std::optional<RootTheoremCell> cell;
      auto get = [&]() -> const RootTheoremCell& {
        if (!cell) cell = root_theorem_cell(r, n, config.tolerance);
        return *cell;
      };
      c.check("negative_distinct", "D_n has deg D_n distinct negative real roots (after q for r = 1)", r, n, [&] {
        const RootReport& report = get().roots;
        return report.verdict == Verdict::Pass ? "" : report.reason;
      });
      c.check("interlacing", "roots of D_n interlace the roots of D_{n+1}", r, n, [&] {
        const InterlacingReport& report = get().interlacing_with_next;
        if (report.verdict == Verdict::Pass) return std::string();
        return std::string(to_string(report.verdict)) + ": " + report.reason;
      });
      c.check("log_concave_unimodal", "coefficients of D_n are log-concave and unimodal", r, n, [&] {
        return get().log_concave && get().unimodal ? "" : std::string("coefficient sequence fails");
      });
      c.check("extreme_coefficients", "D_n has leading coefficient r^n and constant term (r-1)^n", r, n,
              [&] { return get().extreme_coefficients ? "" : std::string("mismatch"); });
    }
  }
}

}  // namespace

Suite parse_suite(const std::string& text) {
  for (Suite s : {Suite::All, Suite::Counts, Suite::Qt, Suite::Bijections, Suite::Eulerian, Suite::Egf, Suite::Roots}) {
    if (text == to_string(s)) return s;
  }
  throw Error(ErrorKind::Parse, "unknown suite '" + text + "' (all, counts, qt, bijections, eulerian, egf, roots)");
}

const char* to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::All: return "all";
    case Suite::Counts: return "counts";
    case Suite::Qt: return "qt";
    case Suite::Bijections: return "bijections";
    case Suite::Eulerian: return "eulerian";
    case Suite::Egf: return "egf";
    case Suite::Roots: return "roots";
  }
  return "?";
}

const char* to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Discrepancy: return "discrepancy";
  }
  return "?";
}

bool VerifyReport::passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

VerifyReport run_verify(const RunConfig& config, Suite suite) {
  validate(config);
  VerifyReport report;
  report.suite = to_string(suite);
  auto wants = [suite](Suite s) { return suite == Suite::All || suite == s; };
  if (wants(Suite::Counts)) counts_suite(config, report.checks, report.discrepancies);
  if (wants(Suite::Qt)) qt_suite(config, report.checks);
  if (wants(Suite::Bijections)) bijections_suite(config, report.checks);
  if (wants(Suite::Eulerian)) eulerian_suite(config, report.checks);
  if (wants(Suite::Egf)) egf_suite(config, report.checks);
  if (wants(Suite::Roots)) roots_suite(config, report.checks);
  std::stable_sort(report.checks.begin(), report.checks.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.suite, a.r, a.n, a.identity) < std::tie(b.suite, b.r, b.n, b.identity);
  });
  return report;
}

json to_json(const VerifyReport& report) {
  json checks = json::array();
  int counts[4] = {0, 0, 0, 0};
  for (const CheckResult& c : report.checks) {
    ++counts[static_cast<int>(c.status)];
    checks.push_back({{"suite", c.suite},
                      {"identity", c.suite + "." + c.identity},
                      {"statement", c.statement},
                      {"r", c.r},
                      {"n", c.n},
                      {"status", to_string(c.status)},
                      {"detail", c.detail}});
  }
  json discrepancies = json::array();
  for (const TableDiscrepancy& d : report.discrepancies) {
    discrepancies.push_back(
        {{"r", d.modulus}, {"n", d.size}, {"printed", d.printed.get_str()}, {"computed", d.computed.get_str()}});
  }
  return {
      {"schema", 1},
      {"suite", report.suite},
      {"pass", report.passed()},
      {"summary", {{"pass", counts[0]}, {"fail", counts[1]}, {"skipped", counts[2]}, {"discrepancy", counts[3]}}},
      {"checks", checks},
      {"discrepancies", discrepancies},
  };
}

int cmd_verify(const RunConfig& config, Suite suite, std::ostream& out) {
  const VerifyReport report = run_verify(config, suite);
  switch (config.format) {
    case OutputFormat::Json: out << to_json(report).dump(2) << '\n'; break;
    case OutputFormat::Csv:
      out << "suite,identity,r,n,status,detail\n";
      for (const CheckResult& c : report.checks) {
        out << c.suite << ',' << c.identity << ',' << c.r << ',' << c.n << ',' << to_string(c.status) << ",\""
            << c.detail << "\"\n";
      }
      break;
    case OutputFormat::Pretty: {
      int failures = 0;
      for (const CheckResult& c : report.checks) {
        if (c.status == CheckStatus::Fail) ++failures;
        std::string status = to_string(c.status);
        std::transform(status.begin(), status.end(), status.begin(), ::toupper);
        out << status << ' ' << c.suite << '.' << c.identity << " r=" << c.r << " n=" << c.n;
        if (!c.detail.empty()) out << "  " << c.detail;
        out << '\n';
      }
      out << report.checks.size() << " checks, " << failures << " failed, " << report.discrepancies.size()
          << " documented discrepancies\n";
      break;
    }
  }
  return report.passed() ? kExitPass : kExitFailure;
}

}  // namespace wreath::cli
