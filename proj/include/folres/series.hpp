#pragma once

#include <vector>

#include "folres/rational.hpp"

namespace folres {

/// Power series a_0 + a_1 t + ... + a_N t^N known modulo t^(N+1).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0);
  TruncatedSeries(std::vector<Rational> coefficients, int order);

  static TruncatedSeries constant(const Rational& value, int order);
  /// value + slope * t
  static TruncatedSeries linear(const Rational& value, const Rational& slope, int order);

  int order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const Rational& operator[](std::size_t k) const { return coefficients_.at(k); }
  Rational& operator[](std::size_t k) { return coefficients_.at(k); }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);
  TruncatedSeries operator-() const;
  /// d/dt; the result is known to one order less.
  TruncatedSeries derivative() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_same_order(const TruncatedSeries& other) const;

  std::vector<Rational> coefficients_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(TruncatedSeries a, const Rational& scalar);

/// Laurent series sum_{e >= lowest} c_e t^e known for every exponent up to the
/// truncation order. Arithmetic tracks how far each result is actually known.
class LaurentSeries {
 public:
  LaurentSeries(int lowest_exponent, std::vector<Rational> coefficients, int truncation_order);

  static LaurentSeries zero(int truncation_order);
  static LaurentSeries from_series(const TruncatedSeries& series);

  /// Exponent of the first stored (nonzero) coefficient; truncation_order()+1 if zero.
  int lowest_exponent() const noexcept { return lowest_; }
  int truncation_order() const noexcept { return truncation_; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// Coefficient of t^exponent; exponents above the truncation order are unknown.
  Rational coefficient(int exponent) const;

  LaurentSeries operator-() const;
  LaurentSeries inverse() const;
  LaurentSeries derivative() const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const Rational& scalar);

 private:
  int lowest_;
  int truncation_;
  std::vector<Rational> coefficients_;
};

/// Coefficient of t^-1. Throws PoleOrderOverflow if the series is not known that far.
Rational laurent_residue(const LaurentSeries& s);

/// Lowest exponent with a nonzero coefficient; OrderExceedsTruncation if none is known.
int laurent_order(const LaurentSeries& s);

}  // namespace folres
