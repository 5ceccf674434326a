#include "folres/series.hpp"

#include <algorithm>

#include "folres/error.hpp"

namespace folres {

TruncatedSeries::TruncatedSeries(int order) : coefficients_(static_cast<std::size_t>(std::max(order, 0)) + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, int order)
    : coefficients_(std::move(coefficients)) {
  coefficients_.resize(static_cast<std::size_t>(std::max(order, 0)) + 1);
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, int order) {
  TruncatedSeries s(order);
  s.coefficients_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::linear(const Rational& value, const Rational& slope, int order) {
  TruncatedSeries s = constant(value, order);
  if (order >= 1) s.coefficients_[1] = slope;
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& c) { return c == 0; });
}

void TruncatedSeries::require_same_order(const TruncatedSeries& other) const {
  if (order() != other.order()) {
    throw Error(ErrorCode::TruncationMismatch,
                "orders " + std::to_string(order()) + " and " + std::to_string(other.order()));
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_order(other);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] += other.coefficients_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_order(other);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] -= other.coefficients_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries negated = *this;
  for (auto& c : negated.coefficients_) c = -c;
  return negated;
}

TruncatedSeries TruncatedSeries::derivative() const {
  const int n = order();
  TruncatedSeries d(std::max(n - 1, 0));
  for (int k = 1; k <= n; ++k) d.coefficients_[static_cast<std::size_t>(k - 1)] = coefficients_[static_cast<std::size_t>(k)] * k;
  return d;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
TruncatedSeries operator*(TruncatedSeries a, const Rational& scalar) { return a *= scalar; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::TruncationMismatch, "product of series of differing orders");
  const auto n = static_cast<std::size_t>(a.order());
  std::vector<Rational> out(n + 1);
  std::vector<std::size_t> nonzero_b;
  for (std::size_t j = 0; j <= n; ++j) {
    if (b[j] != 0) nonzero_b.push_back(j);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j : nonzero_b) {
      if (i + j > n) break;
      out[i + j] += a[i] * b[j];
    }
  }
  return TruncatedSeries(std::move(out), a.order());
}

// ---------------------------------------------------------------------------

LaurentSeries::LaurentSeries(int lowest_exponent, std::vector<Rational> coefficients, int truncation_order)
    : lowest_(lowest_exponent), truncation_(truncation_order), coefficients_(std::move(coefficients)) {
  const int keep = truncation_ - lowest_ + 1;
  if (keep <= 0) {
    coefficients_.clear();
  } else if (static_cast<int>(coefficients_.size()) > keep) {
    coefficients_.resize(static_cast<std::size_t>(keep));
  }
  std::size_t skip = 0;
  while (skip < coefficients_.size() && coefficients_[skip] == 0) ++skip;
  coefficients_.erase(coefficients_.begin(), coefficients_.begin() + static_cast<std::ptrdiff_t>(skip));
  lowest_ += static_cast<int>(skip);
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  if (coefficients_.empty()) lowest_ = truncation_ + 1;
}

LaurentSeries LaurentSeries::zero(int truncation_order) { return LaurentSeries(0, {}, truncation_order); }

LaurentSeries LaurentSeries::from_series(const TruncatedSeries& series) {
  return LaurentSeries(0, series.coefficients(), series.order());
}

Rational LaurentSeries::coefficient(int exponent) const {
  if (exponent > truncation_) {
    throw Error(ErrorCode::OrderExceedsTruncation,
                "coefficient of t^" + std::to_string(exponent) + " is beyond the truncation order " +
                    std::to_string(truncation_));
  }
  const int idx = exponent - lowest_;
  if (idx < 0 || idx >= static_cast<int>(coefficients_.size())) return Rational(0);
  return coefficients_[static_cast<std::size_t>(idx)];
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries negated = *this;
  for (auto& c : negated.coefficients_) c = -c;
  return negated;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const int trunc = std::min(a.truncation_, b.truncation_);
  const int low = std::min(a.lowest_, b.lowest_);
  std::vector<Rational> out;
  for (int e = low; e <= trunc; ++e) out.push_back(a.coefficient(e) + b.coefficient(e));
  return LaurentSeries(low, std::move(out), trunc);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const int trunc = std::min(a.truncation_ + b.lowest_, b.truncation_ + a.lowest_);
  const int low = a.lowest_ + b.lowest_;
  std::vector<Rational> out;
  for (int e = low; e <= trunc; ++e) {
    Rational sum(0);
    const int offset = e - low;
    for (int i = 0; i <= offset; ++i) {
      const int j = offset - i;
      if (i < static_cast<int>(a.coefficients_.size()) && j < static_cast<int>(b.coefficients_.size())) {
        sum += a.coefficients_[static_cast<std::size_t>(i)] * b.coefficients_[static_cast<std::size_t>(j)];
      }
    }
    out.push_back(sum);
  }
  return LaurentSeries(low, std::move(out), trunc);
}

LaurentSeries operator*(const LaurentSeries& a, const Rational& scalar) {
  LaurentSeries scaled = a;
  for (auto& c : scaled.coefficients_) c *= scalar;
  return LaurentSeries(scaled.lowest_, std::move(scaled.coefficients_), scaled.truncation_);
}

LaurentSeries LaurentSeries::inverse() const {
  if (is_zero()) {
    throw Error(ErrorCode::PoleOrderOverflow, "series vanishes through t^" + std::to_string(truncation_));
  }
  const int relative = truncation_ - lowest_;
  std::vector<Rational> inv(static_cast<std::size_t>(relative) + 1);
  const Rational& u0 = coefficients_[0];
  inv[0] = 1 / u0;
  for (int k = 1; k <= relative; ++k) {
    Rational sum(0);
    for (int i = 1; i <= k && i < static_cast<int>(coefficients_.size()); ++i) {
      sum += coefficients_[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(k - i)];
    }
    inv[static_cast<std::size_t>(k)] = -sum / u0;
  }
  return LaurentSeries(-lowest_, std::move(inv), -lowest_ + relative);
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }

LaurentSeries LaurentSeries::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    out.push_back(coefficients_[i] * (lowest_ + static_cast<int>(i)));
  }
  return LaurentSeries(lowest_ - 1, std::move(out), truncation_ - 1);
}

Rational laurent_residue(const LaurentSeries& s) {
  if (s.truncation_order() < -1) {
    throw Error(ErrorCode::PoleOrderOverflow,
                "series known only through t^" + std::to_string(s.truncation_order()) + "; residue unresolved");
  }
  return s.coefficient(-1);
}

int laurent_order(const LaurentSeries& s) {
  if (s.is_zero()) {
    throw Error(ErrorCode::OrderExceedsTruncation,
                "series vanishes through t^" + std::to_string(s.truncation_order()));
  }
  return s.lowest_exponent();
}

}  // namespace folres
