#pragma once

#include <array>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "folres/polynomial.hpp"
#include "folres/rational_function.hpp"
#include "folres/series.hpp"

namespace folres {

/// sum_i a_i dz_i with polynomial coefficients, one slot per variable.
class OneForm {
 public:
  OneForm() = default;
  explicit OneForm(std::vector<std::string> variables);
  OneForm(std::vector<std::string> variables, std::vector<Polynomial> coefficients);

  /// The differential df.
  static OneForm exact(const Polynomial& f);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t dimension() const noexcept { return variables_.size(); }
  const Polynomial& operator[](std::size_t i) const { return coefficients_.at(i); }
  const std::vector<Polynomial>& coefficients() const noexcept { return coefficients_; }
  void set(std::size_t i, Polynomial coefficient);
  bool is_zero() const;

  OneForm& operator+=(const OneForm& other);
  OneForm& operator-=(const OneForm& other);
  OneForm& operator*=(const Polynomial& factor);
  OneForm& operator*=(const Rational& factor);
  OneForm operator-() const;

  std::vector<Rational> evaluate(std::span<const Rational> point) const;
  std::string to_string() const;

  friend bool operator==(const OneForm&, const OneForm&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Polynomial> coefficients_;
};

OneForm operator+(OneForm a, const OneForm& b);
OneForm operator-(OneForm a, const OneForm& b);
OneForm operator*(const Polynomial& p, OneForm a);
OneForm operator*(const Rational& c, OneForm a);

using Pair = std::pair<std::size_t, std::size_t>;
using Triple = std::array<std::size_t, 3>;

/// sum_{i<j} b_ij dz_i ^ dz_j; only nonzero coefficients are stored.
class TwoForm {
 public:
  TwoForm() = default;
  explicit TwoForm(std::vector<std::string> variables) : variables_(std::move(variables)) {}

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::map<Pair, Polynomial>& coefficients() const noexcept { return coefficients_; }
  /// Coefficient of dz_i ^ dz_j for i < j.
  Polynomial at(std::size_t i, std::size_t j) const;
  void add(std::size_t i, std::size_t j, const Polynomial& value);
  bool is_zero() const noexcept { return coefficients_.empty(); }

  TwoForm& operator*=(const Polynomial& factor);
  std::string to_string() const;

  friend bool operator==(const TwoForm&, const TwoForm&) = default;

 private:
  std::vector<std::string> variables_;
  std::map<Pair, Polynomial> coefficients_;
};

/// sum_{i<j<k} c_ijk dz_i ^ dz_j ^ dz_k; only nonzero coefficients are stored.
class ThreeForm {
 public:
  ThreeForm() = default;
  explicit ThreeForm(std::vector<std::string> variables) : variables_(std::move(variables)) {}

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::map<Triple, Polynomial>& coefficients() const noexcept { return coefficients_; }
  Polynomial at(const Triple& key) const;
  void add(const Triple& key, const Polynomial& value);
  bool is_zero() const noexcept { return coefficients_.empty(); }
  std::string to_string() const;

  friend bool operator==(const ThreeForm&, const ThreeForm&) = default;

 private:
  std::vector<std::string> variables_;
  std::map<Triple, Polynomial> coefficients_;
};

TwoForm exterior_derivative(const OneForm& omega);
TwoForm wedge(const OneForm& a, const OneForm& b);
ThreeForm wedge(const OneForm& a, const TwoForm& b);

/// omega ^ d(omega); zero exactly when omega is integrable.
ThreeForm integrability_defect(const OneForm& omega);

/// True iff f divides every coefficient of omega ^ df.
bool is_invariant_hypersurface(const OneForm& omega, const Polynomial& f);

/// 1-form with rational-function coefficients.
class RationalOneForm {
 public:
  RationalOneForm() = default;
  explicit RationalOneForm(std::vector<std::string> variables);
  RationalOneForm(const OneForm& form);  // NOLINT(google-explicit-constructor)

  /// dh / h
  static RationalOneForm logarithmic_differential(const Polynomial& h);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const RationalFunction& operator[](std::size_t i) const { return coefficients_.at(i); }
  void set(std::size_t i, RationalFunction value);

  RationalOneForm& operator+=(const RationalOneForm& other);
  RationalOneForm& operator-=(const RationalOneForm& other);
  RationalOneForm& operator*=(const RationalFunction& factor);

 private:
  std::vector<std::string> variables_;
  std::vector<RationalFunction> coefficients_;
};

RationalOneForm operator+(RationalOneForm a, const RationalOneForm& b);
RationalOneForm operator-(RationalOneForm a, const RationalOneForm& b);
RationalOneForm operator*(const RationalFunction& f, RationalOneForm a);

/// dt-coefficient of the pullback of theta along the curve c(t).
LaurentSeries pullback_to_curve(const RationalOneForm& theta, std::span<const TruncatedSeries> curve);

/// (s, t) -> base + s * dir_s + t * dir_t
struct AffinePlane {
  std::vector<Rational> base;
  std::vector<Rational> dir_s;
  std::vector<Rational> dir_t;
};

/// Pulls omega back to the plane, as A ds + B dt over the variables (s, t).
OneForm restrict_to_plane(const OneForm& omega, const AffinePlane& plane);

struct LogTerm {
  Rational residue;
  Polynomial pole;
};

/// sum_j residue_j df_j / f_j + holomorphic part, with first-order poles only.
class LogarithmicOneForm {
 public:
  LogarithmicOneForm(std::vector<LogTerm> terms, OneForm holomorphic);

  const std::vector<LogTerm>& log_terms() const noexcept { return terms_; }
  const OneForm& holomorphic_part() const noexcept { return holomorphic_; }
  const std::vector<std::string>& variables() const noexcept { return holomorphic_.variables(); }

  /// Residue along {pole = 0}; zero when pole is not one of the log terms.
  Rational residue_along(const Polynomial& pole) const;
  /// Closed iff the holomorphic part is closed.
  bool is_closed() const;
  /// Product of the poles.
  Polynomial common_denominator() const;
  /// common_denominator() times this form, a polynomial 1-form.
  OneForm cleared() const;
  RationalOneForm to_rational() const;

 private:
  std::vector<LogTerm> terms_;
  OneForm holomorphic_;
};

}  // namespace folres
