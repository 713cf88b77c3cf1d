#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wreath/algebra/upolynomial.hpp"

namespace wreath {

/// 2^-40.
Rational default_root_tolerance();

/// p, p', then negated remainders down to the last nonzero term. When p is
/// not squarefree the chain ends at a nonconstant gcd(p, p') and
/// `squarefree` is false.
struct SturmChain {
  std::vector<QPolynomial> sequence;
  bool squarefree = true;
};

/// Throws ZeroPolynomial for p = 0.
SturmChain sturm_chain(const QPolynomial& p);

/// Number of real roots in (lower, upper]; an empty bound means -inf or
/// +inf. Throws NotSquarefree when the chain was built from a polynomial
/// with a repeated factor, InvalidArgument when lower >= upper.
int count_roots(const SturmChain& chain, const std::optional<Rational>& lower,
                const std::optional<Rational>& upper);
int count_roots(const QPolynomial& p, const std::optional<Rational>& lower, const std::optional<Rational>& upper);

/// Rational roots of a polynomial with rational coefficients, ascending,
/// found by the rational root theorem. Leading and trailing coefficients
/// above 10^12 (after clearing denominators) are not factored, in which case
/// an empty list is returned apart from a possible root at 0.
std::vector<Rational> rational_roots(const QPolynomial& p);

/// An open interval holding exactly one root; lower == upper marks an exact
/// rational root.
struct RootInterval {
  Rational lower;
  Rational upper;

  bool exact() const { return lower == upper; }
};

struct RootIsolation {
  QPolynomial polynomial;
  /// Ascending and pairwise disjoint.
  std::vector<RootInterval> roots;
  /// False if p had a repeated factor; roots then lists the distinct ones.
  bool squarefree = true;

  int real_root_count() const noexcept { return static_cast<int>(roots.size()); }
  std::vector<Rational> exact_roots() const;
};

/// Every open interval is narrowed to width <= tolerance. A constant
/// polynomial gives an empty isolation. Throws ZeroPolynomial for p = 0.
RootIsolation isolate_roots(const QPolynomial& p, const Rational& tolerance = default_root_tolerance());

enum class Verdict { Pass, Fail, Inconclusive };
const char* to_string(Verdict v) noexcept;

struct RootReport {
  int degree = 0;
  int real_roots = 0;
  int negative_roots = 0;
  bool squarefree = true;
  Verdict verdict = Verdict::Fail;
  std::string reason;
  RootIsolation isolation;
};

/// deg(p) real roots, all simple and strictly negative.
RootReport verify_negative_distinct(const QPolynomial& p, const Rational& tolerance = default_root_tolerance());

struct InterlacingReport {
  Verdict verdict = Verdict::Fail;
  std::string reason;
  /// Merged root order, 'L' for p_large and 'S' for p_small, once separated.
  std::string pattern;
  RootIsolation small;
  RootIsolation large;
};

/// Each gap between consecutive roots of p_large holds exactly one root of
/// p_small. Needs deg(p_large) = deg(p_small) + 1 and both polynomials
/// negative-distinct. Intervals that still overlap after `max_refinements`
/// bisections give Inconclusive.
InterlacingReport verify_interlacing(const QPolynomial& p_small, const QPolynomial& p_large,
                                     const Rational& tolerance = default_root_tolerance(),
                                     int max_refinements = 400);

bool log_concave(const std::vector<Integer>& coefficients);
bool unimodal(const std::vector<Integer>& coefficients);

/// Everything checked about D_n^{(r)}(q) for one (r, n): the root report
/// (after dividing out the single factor q when r = 1), interlacing with
/// D_{n+1}^{(r)}, log-concavity, unimodality, and the leading coefficient
/// r^n and constant term (r-1)^n.
struct RootTheoremCell {
  int modulus = 0;
  int size = 0;
  BivariatePolynomial polynomial;
  RootReport roots;
  InterlacingReport interlacing_with_next;
  bool log_concave = false;
  bool unimodal = false;
  bool extreme_coefficients = false;

  bool passed() const noexcept;
};

/// The polynomial the root checks run on: D_n^{(r)}, divided by q for r = 1.
QPolynomial root_theorem_polynomial(int r, int n);
RootTheoremCell root_theorem_cell(int r, int n, const Rational& tolerance = default_root_tolerance());

/// {degree, real_roots, negative_roots, squarefree, intervals: [[a, b], ...],
///  exact_roots, verdicts: {negative_distinct}, reason}
nlohmann::json to_json(const RootReport& report);
nlohmann::json to_json(const InterlacingReport& report);
nlohmann::json to_json(const RootTheoremCell& cell);

}  // namespace wreath
