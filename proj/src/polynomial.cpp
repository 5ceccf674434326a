#include "folres/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "folres/error.hpp"
#include "folres/series.hpp"

namespace folres {

namespace {

std::uint64_t degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool monomial_divides(const Exponents& divisor, const Exponents& e) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (divisor[i] > e[i]) return false;
  }
  return true;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + ")";
}

}  // namespace

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& value) {
  Polynomial p(std::move(variables));
  p.add_term(Exponents(p.num_variables(), 0), value);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
  Polynomial p(std::move(variables));
  if (index >= p.num_variables()) {
    throw Error(ErrorCode::UnknownVariable, "variable index " + std::to_string(index) + " out of range");
  }
  Exponents e(p.num_variables(), 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::string_view name) {
  Polynomial p(std::move(variables));
  const auto index = p.variable_index(name);
  return variable(p.variables_, index);
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, Exponents exponents,
                                const Rational& coefficient) {
  Polynomial p(std::move(variables));
  if (exponents.size() != p.num_variables()) {
    throw Error(ErrorCode::VariableMismatch, "exponent vector length differs from variable count");
  }
  p.add_term(exponents, coefficient);
  return p;
}

std::size_t Polynomial::variable_index(std::string_view name) const {
  const auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) {
    throw Error(ErrorCode::UnknownVariable,
                "'" + std::string(name) + "' is not one of " + join_names(variables_));
  }
  return static_cast<std::size_t>(it - variables_.begin());
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const {
  const auto it = terms_.find(Exponents(num_variables(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.begin()->first));
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.at(var)));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = degree_of(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& term) { return degree_of(term.first) == d; });
}

const std::pair<const Exponents, Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::DivisionByZeroPolynomial, "zero polynomial has no leading term");
  return *terms_.begin();
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_variables(const Polynomial& other) const {
  if (variables_ != other.variables_) {
    throw Error(ErrorCode::VariableMismatch,
                join_names(variables_) + " vs " + join_names(other.variables_));
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  require_same_variables(other);
  Polynomial product(variables_);
  Exponents e(num_variables());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      product.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial negated = *this;
  for (auto& [e, c] : negated.terms_) c = -c;
  return negated;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(variables_, Rational(1));
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_variables()) {
    throw Error(ErrorCode::VariableMismatch, "point has " + std::to_string(point.size()) +
                                                 " coordinates, expected " + std::to_string(num_variables()));
  }
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

TruncatedSeries Polynomial::evaluate(std::span<const TruncatedSeries> point) const {
  if (point.size() != num_variables()) {
    throw Error(ErrorCode::VariableMismatch, "series point has " + std::to_string(point.size()) +
                                                 " entries, expected " + std::to_string(num_variables()));
  }
  const int order = point.empty() ? 0 : point.front().order();
  for (const auto& s : point) {
    if (s.order() != order) throw Error(ErrorCode::TruncationMismatch, "series of differing truncation orders");
  }
  // powers[i][k] = point[i]^k, filled lazily up to the largest exponent used
  std::vector<std::vector<TruncatedSeries>> powers(num_variables());
  for (std::size_t i = 0; i < num_variables(); ++i) {
    const int d = degree_in(i);
    powers[i].push_back(TruncatedSeries::constant(Rational(1), order));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  TruncatedSeries sum(order);
  for (const auto& [e, c] : terms_) {
    TruncatedSeries term = TruncatedSeries::constant(c, order);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term = term * powers[i][e[i]];
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= num_variables()) {
    throw Error(ErrorCode::UnknownVariable, "variable index " + std::to_string(var) + " out of range");
  }
  Polynomial d(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents lowered = e;
    --lowered[var];
    d.add_term(lowered, c * e[var]);
  }
  return d;
}

Polynomial Polynomial::derivative(std::string_view name) const { return derivative(variable_index(name)); }

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != num_variables()) {
    throw Error(ErrorCode::VariableMismatch, "substitution needs one image per variable");
  }
  std::vector<std::string> target;
  if (!images.empty()) target = images.front().variables();
  for (const auto& img : images) {
    if (img.variables() != target) {
      throw Error(ErrorCode::VariableMismatch, "substitution images over differing variables");
    }
  }
  std::vector<std::vector<Polynomial>> powers(num_variables());
  for (std::size_t i = 0; i < num_variables(); ++i) {
    const int d = degree_in(i);
    powers[i].push_back(constant(target, Rational(1)));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  Polynomial result(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term *= powers[i][e[i]];
    }
    result += term;
  }
  return result;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  const int d = degree_in(var);
  std::vector<Polynomial> out(static_cast<std::size_t>(std::max(d + 1, 0)), Polynomial(variables_));
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[var] = 0;
    out[e[var]].add_term(rest, c);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    const bool is_const = degree_of(e) == 0;
    if (is_const || magnitude != 1) factors.push_back(folres::to_string(magnitude));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? variables_[i] : variables_[i] + "^" + std::to_string(e[i]));
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) os << "*";
      os << factors[k];
    }
  }
  return os.str();
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial product = a;
  product *= b;
  return product;
}
Polynomial operator*(Polynomial a, const Rational& scalar) { return a *= scalar; }
Polynomial operator*(const Rational& scalar, Polynomial a) { return a *= scalar; }

DivisionResult divide_by_single(const Polynomial& p, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "division by the zero polynomial");
  if (p.variables() != f.variables()) {
    throw Error(ErrorCode::VariableMismatch, "dividend and divisor over differing variables");
  }
  const auto& vars = p.variables();
  const auto& [lead_f, lead_c] = f.leading_term();
  DivisionResult out{Polynomial(vars), Polynomial(vars)};
  Polynomial rest = p;
  Exponents shift(vars.size());
  while (!rest.is_zero()) {
    const auto [lead_e, lead_coef] = rest.leading_term();
    if (monomial_divides(lead_f, lead_e)) {
      for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = lead_e[i] - lead_f[i];
      const Polynomial step = Polynomial::monomial(vars, shift, lead_coef / lead_c);
      out.quotient += step;
      rest -= step * f;
    } else {
      const Polynomial lead = Polynomial::monomial(vars, lead_e, lead_coef);
      out.remainder += lead;
      rest -= lead;
    }
  }
  return out;
}

}  // namespace folres
