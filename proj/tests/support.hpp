#pragma once

#include <complex>
#include <string>
#include <vector>

#include "folres/foliation.hpp"
#include "folres/parser.hpp"
#include "folres/random.hpp"

namespace folres::test {

inline const std::vector<std::string> xyz{"x", "y", "z"};

inline Polynomial P(const std::string& text, const std::vector<std::string>& vars = xyz) {
  return parse_polynomial(text, vars);
}

inline Rational Q(const std::string& text) { return parse_rational(text); }

inline Rational frac(long num, long den) { return Rational(num) / Rational(den); }

inline std::vector<Rational> pt(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

/// The worked example: factors x, y, z with weights 2, 3, 4.
inline LogarithmicPresentation example_presentation() {
  return LogarithmicPresentation{xyz, {P("x"), P("y"), P("z")}, {Rational(2), Rational(3), Rational(4)}, Rational(1)};
}

inline Polynomial random_polynomial(RandomStream& rng, const std::vector<std::string>& vars, int terms, int max_deg) {
  Polynomial p(vars);
  for (int i = 0; i < terms; ++i) {
    Exponents e(vars.size(), 0);
    int budget = max_deg;
    for (auto& x : e) {
      const long k = (rng.small_int(max_deg) + max_deg) % (budget + 1);
      x = static_cast<std::uint32_t>(k);
      budget -= static_cast<int>(k);
    }
    p += Polynomial::monomial(vars, e, Rational(rng.small_int(9)));
  }
  return p;
}

/// Random nonconstant linear form, optionally with a constant term.
inline Polynomial random_linear(RandomStream& rng, const std::vector<std::string>& vars, bool affine) {
  for (;;) {
    Polynomial p = Polynomial::constant(vars, Rational(affine ? rng.small_int(3) : 0));
    for (std::size_t i = 0; i < vars.size(); ++i) {
      p += Polynomial::variable(vars, i) * Rational(rng.small_int(3));
    }
    if (p.total_degree() == 1) return p;
  }
}

inline std::complex<double> to_complex(const Rational& r) { return {r.get_d(), 0.0}; }

inline std::complex<double> evaluate_complex(const Polynomial& p, const std::vector<std::complex<double>>& x) {
  std::complex<double> sum = 0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> term = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= x[i];
    }
    sum += term;
  }
  return sum;
}

}  // namespace folres::test
