#include "folres/forms.hpp"

#include <algorithm>
#include <sstream>

#include "folres/error.hpp"

namespace folres {

namespace {

void require_same(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a != b) throw Error(ErrorCode::VariableMismatch, "forms over differing variables");
}

std::string wrap(const Polynomial& p) {
  return p.num_terms() == 1 ? p.to_string() : "(" + p.to_string() + ")";
}

}  // namespace

OneForm::OneForm(std::vector<std::string> variables) : variables_(std::move(variables)) {
  coefficients_.assign(variables_.size(), Polynomial(variables_));
}

OneForm::OneForm(std::vector<std::string> variables, std::vector<Polynomial> coefficients)
    : variables_(std::move(variables)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != variables_.size()) {
    throw Error(ErrorCode::VariableMismatch, "1-form needs one coefficient per variable");
  }
  for (const auto& c : coefficients_) require_same(c.variables(), variables_);
}

OneForm OneForm::exact(const Polynomial& f) {
  OneForm df(f.variables());
  for (std::size_t i = 0; i < f.num_variables(); ++i) df.coefficients_[i] = f.derivative(i);
  return df;
}

void OneForm::set(std::size_t i, Polynomial coefficient) {
  require_same(coefficient.variables(), variables_);
  coefficients_.at(i) = std::move(coefficient);
}

bool OneForm::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

OneForm& OneForm::operator+=(const OneForm& other) {
  require_same(variables_, other.variables_);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& other) {
  require_same(variables_, other.variables_);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

OneForm& OneForm::operator*=(const Polynomial& factor) {
  for (auto& c : coefficients_) c *= factor;
  return *this;
}

OneForm& OneForm::operator*=(const Rational& factor) {
  for (auto& c : coefficients_) c *= factor;
  return *this;
}

OneForm OneForm::operator-() const {
  OneForm negated = *this;
  for (auto& c : negated.coefficients_) c = -c;
  return negated;
}

std::vector<Rational> OneForm::evaluate(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(coefficients_.size());
  for (const auto& c : coefficients_) out.push_back(c.evaluate(point));
  return out;
}

std::string OneForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << wrap(coefficients_[i]) << " d" << variables_[i];
  }
  return first ? "0" : os.str();
}

OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
OneForm operator*(const Polynomial& p, OneForm a) { return a *= p; }
OneForm operator*(const Rational& c, OneForm a) { return a *= c; }

// ---------------------------------------------------------------------------

Polynomial TwoForm::at(std::size_t i, std::size_t j) const {
  const auto it = coefficients_.find({i, j});
  return it == coefficients_.end() ? Polynomial(variables_) : it->second;
}

void TwoForm::add(std::size_t i, std::size_t j, const Polynomial& value) {
  if (i == j) return;
  Polynomial signed_value = value;
  if (i > j) {
    std::swap(i, j);
    signed_value = -signed_value;
  }
  if (signed_value.is_zero()) return;
  auto [it, inserted] = coefficients_.try_emplace({i, j}, signed_value);
  if (!inserted) {
    it->second += signed_value;
    if (it->second.is_zero()) coefficients_.erase(it);
  }
}

TwoForm& TwoForm::operator*=(const Polynomial& factor) {
  if (factor.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  for (auto& [key, c] : coefficients_) c *= factor;
  return *this;
}

std::string TwoForm::to_string() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : coefficients_) {
    if (!first) os << " + ";
    first = false;
    os << wrap(c) << " d" << variables_[key.first] << "^d" << variables_[key.second];
  }
  return os.str();
}

Polynomial ThreeForm::at(const Triple& key) const {
  const auto it = coefficients_.find(key);
  return it == coefficients_.end() ? Polynomial(variables_) : it->second;
}

void ThreeForm::add(const Triple& key, const Polynomial& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = coefficients_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) coefficients_.erase(it);
  }
}

std::string ThreeForm::to_string() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : coefficients_) {
    if (!first) os << " + ";
    first = false;
    os << wrap(c) << " d" << variables_[key[0]] << "^d" << variables_[key[1]] << "^d" << variables_[key[2]];
  }
  return os.str();
}

TwoForm exterior_derivative(const OneForm& omega) {
  const auto n = omega.dimension();
  TwoForm d(omega.variables());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d.add(i, j, omega[j].derivative(i) - omega[i].derivative(j));
    }
  }
  return d;
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
  require_same(a.variables(), b.variables());
  const auto n = a.dimension();
  TwoForm out(a.variables());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.add(i, j, a[i] * b[j] - a[j] * b[i]);
    }
  }
  return out;
}

ThreeForm wedge(const OneForm& a, const TwoForm& b) {
  require_same(a.variables(), b.variables());
  const auto n = a.dimension();
  ThreeForm out(a.variables());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        out.add({i, j, k}, a[i] * b.at(j, k) - a[j] * b.at(i, k) + a[k] * b.at(i, j));
      }
    }
  }
  return out;
}

ThreeForm integrability_defect(const OneForm& omega) { return wedge(omega, exterior_derivative(omega)); }

bool is_invariant_hypersurface(const OneForm& omega, const Polynomial& f) {
  const TwoForm w = wedge(omega, OneForm::exact(f));
  return std::all_of(w.coefficients().begin(), w.coefficients().end(),
                     [&f](const auto& entry) { return divides(f, entry.second); });
}

// ---------------------------------------------------------------------------

RationalOneForm::RationalOneForm(std::vector<std::string> variables) : variables_(std::move(variables)) {
  coefficients_.assign(variables_.size(), RationalFunction(Polynomial(variables_)));
}

RationalOneForm::RationalOneForm(const OneForm& form) : variables_(form.variables()) {
  for (const auto& c : form.coefficients()) coefficients_.emplace_back(c);
}

RationalOneForm RationalOneForm::logarithmic_differential(const Polynomial& h) {
  RationalOneForm out(h.variables());
  for (std::size_t i = 0; i < h.num_variables(); ++i) out.coefficients_[i] = RationalFunction(h.derivative(i), h);
  return out;
}

void RationalOneForm::set(std::size_t i, RationalFunction value) {
  require_same(value.variables(), variables_);
  coefficients_.at(i) = std::move(value);
}

RationalOneForm& RationalOneForm::operator+=(const RationalOneForm& other) {
  require_same(variables_, other.variables_);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

RationalOneForm& RationalOneForm::operator-=(const RationalOneForm& other) {
  require_same(variables_, other.variables_);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

RationalOneForm& RationalOneForm::operator*=(const RationalFunction& factor) {
  for (auto& c : coefficients_) c *= factor;
  return *this;
}

RationalOneForm operator+(RationalOneForm a, const RationalOneForm& b) { return a += b; }
RationalOneForm operator-(RationalOneForm a, const RationalOneForm& b) { return a -= b; }
RationalOneForm operator*(const RationalFunction& f, RationalOneForm a) { return a *= f; }

LaurentSeries pullback_to_curve(const RationalOneForm& theta, std::span<const TruncatedSeries> curve) {
  if (curve.size() != theta.variables().size()) {
    throw Error(ErrorCode::VariableMismatch, "curve dimension differs from the form's variable count");
  }
  const int order = curve.empty() ? 0 : curve.front().order();
  LaurentSeries sum = LaurentSeries::zero(order - 1);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (theta[i].is_zero()) continue;
    const LaurentSeries value = theta[i].evaluate(curve);
    const TruncatedSeries velocity = curve[i].derivative();
    if (!velocity.is_zero()) sum = sum + value * LaurentSeries::from_series(velocity);
  }
  return sum;
}

OneForm restrict_to_plane(const OneForm& omega, const AffinePlane& plane) {
  const auto n = omega.dimension();
  if (plane.base.size() != n || plane.dir_s.size() != n || plane.dir_t.size() != n) {
    throw Error(ErrorCode::DegeneratePlane, "plane data has the wrong dimension");
  }
  bool independent = false;
  for (std::size_t i = 0; i < n && !independent; ++i) {
    for (std::size_t j = i + 1; j < n && !independent; ++j) {
      independent = plane.dir_s[i] * plane.dir_t[j] - plane.dir_s[j] * plane.dir_t[i] != 0;
    }
  }
  if (!independent) throw Error(ErrorCode::DegeneratePlane, "plane directions are linearly dependent");

  const std::vector<std::string> st{"s", "t"};
  const Polynomial s = Polynomial::variable(st, 0);
  const Polynomial t = Polynomial::variable(st, 1);
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(Polynomial::constant(st, plane.base[i]) + s * plane.dir_s[i] + t * plane.dir_t[i]);
  }
  Polynomial a(st);
  Polynomial b(st);
  for (std::size_t i = 0; i < n; ++i) {
    if (omega[i].is_zero()) continue;
    const Polynomial pulled = omega[i].substitute(images);
    a += pulled * plane.dir_s[i];
    b += pulled * plane.dir_t[i];
  }
  return OneForm(st, {a, b});
}

// ---------------------------------------------------------------------------

LogarithmicOneForm::LogarithmicOneForm(std::vector<LogTerm> terms, OneForm holomorphic)
    : terms_(std::move(terms)), holomorphic_(std::move(holomorphic)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].pole.variables() != holomorphic_.variables()) {
      throw Error(ErrorCode::VariableMismatch, "pole and holomorphic part over differing variables");
    }
    if (terms_[i].pole.is_constant()) throw Error(ErrorCode::InvalidPresentation, "constant pole");
    for (std::size_t j = 0; j < i; ++j) {
      if (terms_[i].pole == terms_[j].pole) throw Error(ErrorCode::InvalidPresentation, "repeated pole");
    }
  }
}

Rational LogarithmicOneForm::residue_along(const Polynomial& pole) const {
  for (const auto& term : terms_) {
    if (term.pole == pole) return term.residue;
  }
  return Rational(0);
}

bool LogarithmicOneForm::is_closed() const { return exterior_derivative(holomorphic_).is_zero(); }

Polynomial LogarithmicOneForm::common_denominator() const {
  Polynomial product = Polynomial::constant(variables(), Rational(1));
  for (const auto& term : terms_) product *= term.pole;
  return product;
}

OneForm LogarithmicOneForm::cleared() const {
  const Polynomial all = common_denominator();
  OneForm out = all * holomorphic_;
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    Polynomial others = Polynomial::constant(variables(), terms_[j].residue);
    for (std::size_t l = 0; l < terms_.size(); ++l) {
      if (l != j) others *= terms_[l].pole;
    }
    out += others * OneForm::exact(terms_[j].pole);
  }
  return out;
}

RationalOneForm LogarithmicOneForm::to_rational() const {
  RationalOneForm out(holomorphic_);
  for (const auto& term : terms_) {
    out += RationalFunction(Polynomial::constant(variables(), term.residue)) *
           RationalOneForm::logarithmic_differential(term.pole);
  }
  return out;
}

}  // namespace folres
