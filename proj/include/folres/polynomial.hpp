#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "folres/rational.hpp"

namespace folres {

class TruncatedSeries;

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order, largest first: higher total degree wins, ties are
/// broken lexicographically with the first variable most significant.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients over an ordered
/// list of variable names. No zero coefficient is ever stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial constant(std::vector<std::string> variables, const Rational& value);
  static Polynomial variable(std::vector<std::string> variables, std::size_t index);
  static Polynomial variable(std::vector<std::string> variables, std::string_view name);
  static Polynomial monomial(std::vector<std::string> variables, Exponents exponents,
                             const Rational& coefficient);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t num_variables() const noexcept { return variables_.size(); }
  /// Index of a variable name; throws UnknownVariable.
  std::size_t variable_index(std::string_view name) const;

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational constant_term() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// -1 for the zero polynomial.
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  const std::pair<const Exponents, Rational>& leading_term() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial operator-() const;
  Polynomial pow(unsigned exponent) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Composition with truncated series, truncated at their common order.
  TruncatedSeries evaluate(std::span<const TruncatedSeries> point) const;

  Polynomial derivative(std::size_t var) const;
  Polynomial derivative(std::string_view name) const;

  /// Replaces variable i by images[i]; the result lives over the images' variables.
  Polynomial substitute(std::span<const Polynomial> images) const;
  /// coefficients_in(v)[k] is the coefficient of v^k, free of v.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Exponents& exponents, const Rational& coefficient);
  void require_same_variables(const Polynomial& other) const;

  std::vector<std::string> variables_;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& scalar);
Polynomial operator*(const Rational& scalar, Polynomial a);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Graded-lex division by a single divisor: p = quotient * f + remainder, and the
/// remainder vanishes exactly when f divides p.
DivisionResult divide_by_single(const Polynomial& p, const Polynomial& f);

inline bool divides(const Polynomial& f, const Polynomial& p) {
  return divide_by_single(p, f).remainder.is_zero();
}

}  // namespace folres
