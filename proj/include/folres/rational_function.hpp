#pragma once

#include <span>

#include "folres/polynomial.hpp"
#include "folres/series.hpp"

namespace folres {

/// Quotient of polynomials, kept unreduced. Equality is cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Polynomial numerator);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const noexcept { return numerator_; }
  const Polynomial& denominator() const noexcept { return denominator_; }
  const std::vector<std::string>& variables() const noexcept { return numerator_.variables(); }
  bool is_zero() const noexcept { return numerator_.is_zero(); }

  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);
  RationalFunction operator-() const;

  RationalFunction derivative(std::size_t var) const;
  /// Cancels the denominator when it divides the numerator exactly.
  RationalFunction simplified() const;

  Rational evaluate(std::span<const Rational> point) const;
  /// num(c(t)) / den(c(t)); PoleOrderOverflow if the denominator vanishes to full depth.
  LaurentSeries evaluate(std::span<const TruncatedSeries> point) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.numerator_ * b.denominator_ == b.numerator_ * a.denominator_;
  }

 private:
  Polynomial numerator_;
  Polynomial denominator_;
};

RationalFunction operator+(RationalFunction a, const RationalFunction& b);
RationalFunction operator-(RationalFunction a, const RationalFunction& b);
RationalFunction operator*(RationalFunction a, const RationalFunction& b);
RationalFunction operator/(RationalFunction a, const RationalFunction& b);

}  // namespace folres
