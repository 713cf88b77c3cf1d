#include "wreath/algebra/rational_function.hpp"

#include "wreath/error.hpp"

namespace wreath {

RationalFunctionQ::RationalFunctionQ(QPolynomial numerator, QPolynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  normalize();
}

void RationalFunctionQ::normalize() {
  if (numerator_.is_zero()) {
    denominator_ = QPolynomial(1);
    return;
  }
  const QPolynomial g = gcd(numerator_, denominator_);
  if (g.degree() > 0) {
    numerator_ = divmod(numerator_, g).first;
    denominator_ = divmod(denominator_, g).first;
  }
  const Rational lead = denominator_.leading();
  if (lead != 1) {
    numerator_ = numerator_.scaled(1 / lead);
    denominator_ = denominator_.scaled(1 / lead);
  }
}

RationalFunctionQ& RationalFunctionQ::operator+=(const RationalFunctionQ& other) {
  if (denominator_ == other.denominator_) {
    numerator_ += other.numerator_;
  } else {
    numerator_ = numerator_ * other.denominator_ + other.numerator_ * denominator_;
    denominator_ = denominator_ * other.denominator_;
  }
  normalize();
  return *this;
}

RationalFunctionQ& RationalFunctionQ::operator-=(const RationalFunctionQ& other) { return *this += -other; }

RationalFunctionQ& RationalFunctionQ::operator*=(const RationalFunctionQ& other) {
  numerator_ = numerator_ * other.numerator_;
  denominator_ = denominator_ * other.denominator_;
  normalize();
  return *this;
}

RationalFunctionQ& RationalFunctionQ::operator/=(const RationalFunctionQ& other) {
  if (other.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero rational function");
  numerator_ = numerator_ * other.denominator_;
  denominator_ = denominator_ * other.numerator_;
  normalize();
  return *this;
}

RationalFunctionQ RationalFunctionQ::operator-() const {
  RationalFunctionQ out = *this;
  out.numerator_ = -out.numerator_;
  return out;
}

std::string RationalFunctionQ::to_string() const {
  if (is_polynomial()) return numerator_.to_string();
  return "(" + numerator_.to_string() + ")/(" + denominator_.to_string() + ")";
}

}  // namespace wreath
