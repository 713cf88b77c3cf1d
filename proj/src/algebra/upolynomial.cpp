#include "wreath/algebra/upolynomial.hpp"

#include "wreath/error.hpp"

namespace wreath {

QPolynomial::QPolynomial(const Rational& constant) {
  if (constant != 0) coefficients_.push_back(constant);
}

QPolynomial::QPolynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

QPolynomial QPolynomial::from(const BivariatePolynomial& p) {
  std::vector<Rational> c;
  for (const Integer& x : p.q_coefficients()) c.emplace_back(x);
  return QPolynomial(std::move(c));
}

void QPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational QPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coefficients_[i];
}

Rational QPolynomial::leading() const { return is_zero() ? Rational(0) : coefficients_.back(); }

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  trim();
  return *this;
}

QPolynomial QPolynomial::operator-() const { return scaled(-1); }

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::scaled(const Rational& c) const {
  std::vector<Rational> out(coefficients_);
  for (Rational& x : out) x *= c;
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> out(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) out[i - 1] = coefficients_[i] * static_cast<long>(i);
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

Rational QPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int QPolynomial::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

BivariatePolynomial QPolynomial::to_bivariate() const {
  std::vector<Integer> c;
  c.reserve(coefficients_.size());
  for (const Rational& x : coefficients_) {
    if (x.get_den() != 1) {
      throw Error(ErrorKind::NotPolynomial, "non-integer coefficient " + fraction_string(x));
    }
    c.push_back(x.get_num());
  }
  return BivariatePolynomial::from_q_coefficients(c);
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coefficients_[i];
    if (c == 0) continue;
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || magnitude != 1) out += magnitude.get_str();
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {QPolynomial(), a};
  std::vector<Rational> remainder = a.coefficients();
  std::vector<Rational> quotient(a.degree() - b.degree() + 1);
  const Rational lead = b.leading();
  const auto& divisor = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational factor = remainder[k + b.degree()] / lead;
    quotient[k] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) remainder[k + j] -= factor * divisor[j];
  }
  return {QPolynomial(std::move(quotient)), QPolynomial(std::move(remainder))};
}

QPolynomial gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    QPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace wreath
