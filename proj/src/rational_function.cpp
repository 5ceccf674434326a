#include "folres/rational_function.hpp"

#include "folres/error.hpp"

namespace folres {

RationalFunction::RationalFunction(Polynomial numerator)
    : numerator_(std::move(numerator)),
      denominator_(Polynomial::constant(numerator_.variables(), Rational(1))) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "zero denominator");
  if (numerator_.variables() != denominator_.variables()) {
    throw Error(ErrorCode::VariableMismatch, "numerator and denominator over differing variables");
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (denominator_ == other.denominator_) {
    numerator_ += other.numerator_;
  } else {
    numerator_ = numerator_ * other.denominator_ + other.numerator_ * denominator_;
    denominator_ *= other.denominator_;
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) { return *this += -other; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  numerator_ *= other.numerator_;
  denominator_ *= other.denominator_;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  if (other.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "division by the zero function");
  numerator_ *= other.denominator_;
  denominator_ *= other.numerator_;
  return *this;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-numerator_, denominator_); }

RationalFunction RationalFunction::derivative(std::size_t var) const {
  Polynomial num = numerator_.derivative(var) * denominator_ - numerator_ * denominator_.derivative(var);
  return RationalFunction(std::move(num), denominator_ * denominator_);
}

RationalFunction RationalFunction::simplified() const {
  if (denominator_.is_constant()) {
    const Rational c = denominator_.constant_term();
    return RationalFunction(numerator_ * (1 / c));
  }
  auto [q, r] = divide_by_single(numerator_, denominator_);
  if (r.is_zero()) return RationalFunction(std::move(q));
  return *this;
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  const Rational den = denominator_.evaluate(point);
  if (den == 0) throw Error(ErrorCode::DivisionByZeroPolynomial, "denominator vanishes at the point");
  return numerator_.evaluate(point) / den;
}

LaurentSeries RationalFunction::evaluate(std::span<const TruncatedSeries> point) const {
  const auto num = LaurentSeries::from_series(numerator_.evaluate(point));
  const auto den = LaurentSeries::from_series(denominator_.evaluate(point));
  if (den.is_zero()) {
    throw Error(ErrorCode::PoleOrderOverflow,
                "denominator " + denominator_.to_string() + " vanishes along the curve to full depth");
  }
  return num / den;
}

RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

}  // namespace folres
