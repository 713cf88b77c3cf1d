#include "wreath/algebra/polynomial.hpp"

#include "wreath/error.hpp"

namespace wreath {

BivariatePolynomial::BivariatePolynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Exponents{0, 0}, constant);
}

BivariatePolynomial BivariatePolynomial::monomial(int q_degree, int t_degree, const Integer& c) {
  if (q_degree < 0 || t_degree < 0) {
    throw Error(ErrorKind::InvalidArgument, "monomial degrees must be nonnegative");
  }
  BivariatePolynomial p;
  p.add_term({q_degree, t_degree}, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::from_q_coefficients(const std::vector<Integer>& coefficients) {
  BivariatePolynomial p;
  for (std::size_t i = 0; i < coefficients.size(); ++i) p.add_term({static_cast<int>(i), 0}, coefficients[i]);
  return p;
}

void BivariatePolynomial::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer BivariatePolynomial::coefficient(int q_degree, int t_degree) const {
  auto it = terms_.find({q_degree, t_degree});
  return it == terms_.end() ? Integer(0) : it->second;
}

int BivariatePolynomial::q_degree() const noexcept {
  return terms_.empty() ? -1 : terms_.rbegin()->first.first;
}

int BivariatePolynomial::t_degree() const noexcept {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int BivariatePolynomial::q_valuation() const noexcept {
  return terms_.empty() ? -1 : terms_.begin()->first.first;
}

bool BivariatePolynomial::is_q_only() const noexcept {
  for (const auto& [e, c] : terms_) {
    if (e.second != 0) return false;
  }
  return true;
}

std::vector<Integer> BivariatePolynomial::q_coefficients() const {
  if (!is_q_only()) throw Error(ErrorKind::NotPolynomial, "polynomial involves t: " + to_string());
  std::vector<Integer> out(q_degree() + 1);
  for (const auto& [e, c] : terms_) out[e.first] = c;
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& other) {
  *this = *this * other;
  return *this;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::derivative_q() const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) out.add_term({e.first - 1, e.second}, c * e.first);
  }
  return out;
}

Rational BivariatePolynomial::evaluate(const Rational& q, const Rational& t) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    total += Rational(c) * power(q, static_cast<unsigned>(e.first)) *
             power(t, static_cast<unsigned>(e.second));
  }
  return total;
}

BivariatePolynomial BivariatePolynomial::at_t_one() const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_) out.add_term({e.first, 0}, c);
  return out;
}

namespace {

std::string variable_part(int q_degree, int t_degree) {
  std::string out;
  if (q_degree >= 1) out += "q";
  if (q_degree >= 2) out += "^" + std::to_string(q_degree);
  if (t_degree >= 1) out += "t";
  if (t_degree >= 2) out += "^" + std::to_string(t_degree);
  return out;
}

}  // namespace

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string vars = variable_part(e.first, e.second);
    Integer magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (vars.empty() || magnitude != 1) out += magnitude.get_str();
    out += vars;
  }
  return out;
}

BivariatePolynomial pow(const BivariatePolynomial& base, unsigned exponent) {
  BivariatePolynomial out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

bool reciprocal_check(const BivariatePolynomial& p, int n) {
  const std::vector<Integer> c = p.q_coefficients();
  if (static_cast<int>(c.size()) - 1 > n) return false;
  for (int i = 0; i <= n; ++i) {
    const Integer lo = i < static_cast<int>(c.size()) ? c[i] : Integer(0);
    const int j = n - i;
    const Integer hi = j < static_cast<int>(c.size()) ? c[j] : Integer(0);
    if (lo != hi) return false;
  }
  return true;
}

bool is_palindromic(const BivariatePolynomial& p) {
  if (p.is_zero()) return true;
  return reciprocal_check(p, p.q_valuation() + p.q_degree());
}

nlohmann::json to_json(const BivariatePolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back({{"q", e.first}, {"t", e.second}, {"c", c.get_str()}});
  }
  return out;
}

BivariatePolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "polynomial JSON must be an array");
  BivariatePolynomial out;
  for (const auto& term : j) {
    try {
      const Integer c(term.at("c").get<std::string>(), 10);
      out += BivariatePolynomial::monomial(term.at("q").get<int>(), term.at("t").get<int>(), c);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, std::string("bad polynomial term: ") + e.what());
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::Parse, "bad coefficient string in polynomial JSON");
    }
  }
  return out;
}

}  // namespace wreath
