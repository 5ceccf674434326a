#include "folres/foliation.hpp"

#include <algorithm>
#include <set>

#include "folres/error.hpp"
#include "folres/random.hpp"

namespace folres {

namespace {

void validate_factors(const std::vector<std::string>& variables, const std::vector<Polynomial>& factors,
                      std::size_t weights) {
  if (variables.empty()) throw Error(ErrorCode::InvalidPresentation, "no variables");
  if (factors.size() < 2) throw Error(ErrorCode::InvalidPresentation, "at least two factors are required");
  if (factors.size() != weights) {
    throw Error(ErrorCode::InvalidPresentation, std::to_string(factors.size()) + " factors but " +
                                                    std::to_string(weights) + " weights");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].variables() != variables) {
      throw Error(ErrorCode::VariableMismatch, "factor " + std::to_string(i + 1) + " over differing variables");
    }
    if (factors[i].is_constant()) {
      throw Error(ErrorCode::InvalidPresentation, "factor " + std::to_string(i + 1) + " is constant");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (factors[i] == factors[j]) {
        throw Error(ErrorCode::InvalidPresentation,
                    "factors " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
      }
    }
  }
}

Polynomial one(const std::vector<std::string>& variables) { return Polynomial::constant(variables, Rational(1)); }

Polynomial product_except(const std::vector<Polynomial>& factors, std::size_t skip_a, std::size_t skip_b) {
  Polynomial out = one(factors.front().variables());
  for (std::size_t l = 0; l < factors.size(); ++l) {
    if (l != skip_a && l != skip_b) out *= factors[l];
  }
  return out;
}

std::uint64_t task_seed(std::uint64_t seed, const std::string& tag) { return RandomStream(seed).split(tag).seed(); }

bool is_zero_vector(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

void LogarithmicPresentation::validate() const {
  validate_factors(variables, factors, weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] == 0) throw Error(ErrorCode::InvalidPresentation, "weight " + std::to_string(j + 1) + " is zero");
  }
}

void FirstIntegralPresentation::validate() const {
  validate_factors(variables, factors, multiplicities.size());
  for (std::size_t j = 0; j < multiplicities.size(); ++j) {
    if (multiplicities[j] == 0) {
      throw Error(ErrorCode::InvalidPresentation, "multiplicity " + std::to_string(j + 1) + " is not positive");
    }
  }
}

LogarithmicPresentation FirstIntegralPresentation::to_logarithmic() const {
  LogarithmicPresentation p{variables, factors, {}, Rational(1)};
  for (unsigned m : multiplicities) p.weights.emplace_back(m);
  return p;
}

Polynomial FirstIntegralPresentation::first_integral() const {
  Polynomial out = one(variables);
  for (std::size_t j = 0; j < factors.size(); ++j) out *= factors[j].pow(multiplicities[j]);
  return out;
}

OneForm build_omega(const LogarithmicPresentation& p) {
  p.validate();
  OneForm omega(p.variables);
  for (std::size_t j = 0; j < p.factors.size(); ++j) {
    omega += (product_except(p.factors, j, j) * p.weights[j]) * OneForm::exact(p.factors[j]);
  }
  if (!integrability_defect(omega).is_zero()) {
    throw Error(ErrorCode::NotIntegrable, "internal: logarithmic form with nonzero defect");
  }
  return omega;
}

OneForm build_omega(const FirstIntegralPresentation& p) {
  p.validate();
  return build_omega(p.to_logarithmic());
}

CofactorForm cofactor(const LogarithmicPresentation& p, const Rational& t) {
  const OneForm omega = build_omega(p);
  std::vector<LogTerm> terms;
  for (std::size_t j = 0; j < p.factors.size(); ++j) {
    const Rational residue = 1 - t * p.weights[j];
    if (residue != 0) terms.push_back({residue, p.factors[j]});
  }
  LogarithmicOneForm gamma0(std::move(terms), OneForm(p.variables));
  TwoForm lhs = exterior_derivative(omega);
  lhs *= gamma0.common_denominator();
  if (!(lhs == wedge(gamma0.cleared(), omega))) {
    throw Error(ErrorCode::CofactorIdentityFailed, "d(omega) != gamma0 ^ omega at gauge t = " + to_string(t));
  }
  return CofactorForm{t, std::move(gamma0), OneForm(p.variables)};
}

SaitoDecomposition canonical_saito(const LogarithmicPresentation& p, std::size_t j) {
  SaitoDecomposition s;
  s.label = "V" + std::to_string(j + 1);
  s.g = one(p.variables);
  s.h = product_except(p.factors, j, j) * p.weights[j];
  s.f = p.factors.at(j);
  s.eta = OneForm(p.variables);
  for (std::size_t l = 0; l < p.factors.size(); ++l) {
    if (l == j) continue;
    s.eta += (product_except(p.factors, j, l) * p.weights[l]) * OneForm::exact(p.factors[l]);
  }
  return s;
}

SaitoCertificate verify_saito(const SaitoDecomposition& s, const OneForm& omega, std::uint64_t seed,
                              int max_attempts, const std::vector<std::vector<Rational>>& fallback_points) {
  const std::string name = s.label.empty() ? "{" + s.f.to_string() + " = 0}" : s.label;
  if (s.f.is_constant()) throw Error(ErrorCode::InvalidPresentation, name + ": f is constant");
  if (s.g.is_zero()) throw Error(ErrorCode::SaitoIdentityFailed, name + ": g is zero");
  const OneForm lhs = s.g * omega;
  const OneForm rhs = s.h * OneForm::exact(s.f) + s.f * s.eta;
  if (!(lhs == rhs)) throw Error(ErrorCode::SaitoIdentityFailed, name + ": g*omega != h*df + f*eta");

  SaitoCertificate cert{s.label, "sampled", {}};
  auto points = sample_hypersurface_points(s.f, 3, seed, max_attempts);
  if (!points.empty()) {
    auto nonzero_somewhere = [&](const Polynomial& q) {
      return std::any_of(points.begin(), points.end(), [&](const auto& pt) { return q.evaluate(pt) != 0; });
    };
    if (!nonzero_somewhere(s.h)) {
      throw Error(ErrorCode::SaitoCoprimalityFailed, name + ": h vanishes at every sampled point of V");
    }
    if (!nonzero_somewhere(s.g)) {
      throw Error(ErrorCode::SaitoCoprimalityFailed, name + ": g vanishes at every sampled point of V");
    }
    cert.points = std::move(points);
    return cert;
  }

  cert.method = "curve";
  RandomStream rng = RandomStream(seed).split("saito-curve");
  bool tested = false;
  for (const auto& pt : fallback_points) {
    if (s.f.evaluate(pt) != 0) continue;
    std::vector<Rational> grad;
    for (std::size_t i = 0; i < pt.size(); ++i) grad.push_back(s.f.derivative(i).evaluate(pt));
    if (is_zero_vector(grad)) continue;
    std::vector<Rational> r(pt.size());
    for (auto& x : r) x = rng.nonzero_int();
    Rational norm(0), proj(0);
    for (std::size_t i = 0; i < pt.size(); ++i) {
      norm += grad[i] * grad[i];
      proj += grad[i] * r[i];
    }
    std::vector<Rational> d(pt.size());
    for (std::size_t i = 0; i < pt.size(); ++i) d[i] = r[i] * norm - proj * grad[i];
    if (is_zero_vector(d)) continue;
    const std::array<Polynomial, 1> eqs{s.f};
    const std::array<std::size_t, 1> coords{correction_coordinate(s.f, pt)};
    const auto curve = lift_curve(eqs, pt, d, coords, kDefaultTruncation);
    tested = true;
    if (!s.h.evaluate(curve).is_zero() && !s.g.evaluate(curve).is_zero()) {
      cert.points.push_back(pt);
      return cert;
    }
  }
  if (tested) throw Error(ErrorCode::SaitoCoprimalityFailed, name + ": h or g vanishes along every test curve in V");
  throw Error(ErrorCode::UserPointRequired, name + ": cannot sample V; declare a component with a generic_point");
}

Foliation make_foliation(Presentation p) {
  Foliation out;
  if (auto* log = std::get_if<LogarithmicPresentation>(&p)) {
    out.variables = log->variables;
    out.omega = build_omega(*log);
    out.logarithmic = *log;
    out.hypersurfaces = log->factors;
  } else if (auto* fi = std::get_if<FirstIntegralPresentation>(&p)) {
    out.variables = fi->variables;
    out.omega = build_omega(*fi);
    out.logarithmic = fi->to_logarithmic();
    out.hypersurfaces = fi->factors;
  } else {
    auto& ex = std::get<ExplicitPresentation>(p);
    out.variables = ex.omega.variables();
    if (out.variables.empty()) throw Error(ErrorCode::InvalidPresentation, "no variables");
    if (ex.omega.is_zero()) throw Error(ErrorCode::InvalidPresentation, "omega is zero");
    const ThreeForm defect = integrability_defect(ex.omega);
    if (!defect.is_zero()) {
      throw Error(ErrorCode::NotIntegrable, "omega ^ d(omega) = " + defect.to_string());
    }
    out.omega = ex.omega;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < ex.saito.size(); ++i) {
      auto& s = ex.saito[i];
      if (s.label.empty()) s.label = "V" + std::to_string(i + 1);
      if (!seen.insert(s.label).second) throw Error(ErrorCode::InvalidPresentation, "duplicate label " + s.label);
      for (const Polynomial* q : {&s.g, &s.h, &s.f}) {
        if (q->variables() != out.variables) {
          throw Error(ErrorCode::VariableMismatch, s.label + ": Saito data over differing variables");
        }
      }
      if (s.eta.variables() != out.variables) {
        throw Error(ErrorCode::VariableMismatch, s.label + ": eta over differing variables");
      }
      out.hypersurfaces.push_back(s.f);
    }
  }
  if (out.logarithmic) {
    for (std::size_t j = 0; j < out.hypersurfaces.size(); ++j) out.labels.push_back("V" + std::to_string(j + 1));
  } else {
    for (const auto& s : std::get<ExplicitPresentation>(p).saito) out.labels.push_back(s.label);
  }
  out.presentation = std::move(p);
  return out;
}

bool SingularComponent::contained_in(std::size_t j) const {
  return std::find(containing.begin(), containing.end(), j) != containing.end();
}

namespace {

std::vector<Polynomial> select(const std::vector<Polynomial>& all, const std::vector<std::size_t>& skip) {
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (std::find(skip.begin(), skip.end(), k) == skip.end()) out.push_back(all[k]);
  }
  return out;
}

std::vector<std::size_t> containing_hypersurfaces(const Foliation& fol, const GenericPointCertificate& cert,
                                                  std::uint64_t seed, int truncation) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < fol.hypersurfaces.size(); ++k) {
    if (vanishes_on_component(fol.hypersurfaces[k], cert, seed, truncation)) out.push_back(k);
  }
  return out;
}

void require_singular(const Foliation& fol, const std::string& label, const GenericPointCertificate& cert) {
  if (!is_zero_vector(fol.omega.evaluate(cert.point))) {
    std::string pt;
    for (std::size_t i = 0; i < cert.point.size(); ++i) pt += (i ? ", " : "") + to_string(cert.point[i]);
    throw Error(ErrorCode::ComponentNotSingular, label + ": omega does not vanish at (" + pt + ")");
  }
}

void attach_second_point(SingularComponent& c, const std::vector<Polynomial>& avoid, std::uint64_t seed,
                         const EnumerationOptions& options) {
  if (!options.double_check_points) return;
  try {
    auto second = find_generic_point(c.cut[0], c.cut[1], avoid, task_seed(seed, "second-point"),
                                     options.max_attempts, std::nullopt, false);
    if (second.point != c.certificate.point) c.second_certificate = std::move(second);
  } catch (const Error&) {
  }
}

}  // namespace

ComponentSet enumerate_components(const Foliation& fol, const std::optional<std::vector<DeclaredComponent>>& declared,
                                  const EnumerationOptions& options) {
  ComponentSet out;
  const auto& hyp = fol.hypersurfaces;

  if (declared) {
    for (std::size_t idx = 0; idx < declared->size(); ++idx) {
      const auto& d = (*declared)[idx];
      const std::string label = d.label.empty() ? "Z" + std::to_string(idx + 1) : d.label;
      if (d.cut[0].variables() != fol.variables || d.cut[1].variables() != fol.variables) {
        throw Error(ErrorCode::VariableMismatch, label + ": cut pair over differing variables");
      }
      const std::uint64_t seed = task_seed(options.seed, label);
      GenericPointCertificate probe =
          find_generic_point(d.cut[0], d.cut[1], {}, seed, options.max_attempts, d.point);
      require_singular(fol, label, probe);
      SingularComponent c;
      c.label = label;
      c.cut = d.cut;
      c.containing = containing_hypersurfaces(fol, probe, seed, options.truncation);
      const auto avoid = select(hyp, c.containing);
      c.certificate = find_generic_point(d.cut[0], d.cut[1], avoid, seed, options.max_attempts, d.point);
      require_singular(fol, label, c.certificate);
      c.degree = d.degree.value_or(1);
      c.degree_verified = false;
      attach_second_point(c, avoid, seed, options);
      out.components.push_back(std::move(c));
    }
    return out;
  }

  if (!fol.logarithmic) {
    throw Error(ErrorCode::InvalidInput, "automatic components need a logarithmic or first-integral presentation");
  }
  std::vector<std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < hyp.size(); ++i) {
    for (std::size_t j = i + 1; j < hyp.size(); ++j) {
      const std::string label = "Z_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      const std::uint64_t seed = task_seed(options.seed, label);
      SingularComponent c;
      c.label = label;
      c.cut = {hyp[i], hyp[j]};
      try {
        c.certificate = find_generic_point(hyp[i], hyp[j], select(hyp, {i, j}), seed, options.max_attempts);
        c.containing = {i, j};
      } catch (const Error& first) {
        if (first.code() != ErrorCode::NoGenericPointFound) {
          if (options.strict) throw;
          out.warnings.push_back(label + " skipped: " + first.what());
          continue;
        }
        try {
          const auto probe = find_generic_point(hyp[i], hyp[j], {}, seed, options.max_attempts);
          c.containing = containing_hypersurfaces(fol, probe, seed, options.truncation);
          c.certificate = find_generic_point(hyp[i], hyp[j], select(hyp, c.containing), seed, options.max_attempts);
        } catch (const Error& second) {
          if (options.strict) throw Error(second.code(), label + ": " + second.what());
          out.warnings.push_back(label + " skipped: " + second.what());
          continue;
        }
        if (std::find(seen.begin(), seen.end(), c.containing) != seen.end()) {
          out.warnings.push_back(label + " coincides with an earlier component");
          continue;
        }
        if (c.containing.size() > 2) {
          std::string names;
          for (auto k : c.containing) names += (names.empty() ? "" : ",") + fol.labels[k];
          out.warnings.push_back(label + " lies on " + names);
        }
      }
      require_singular(fol, label, c.certificate);
      seen.push_back(c.containing);
      const int di = hyp[i].total_degree();
      const int dj = hyp[j].total_degree();
      c.degree = di * dj;
      c.degree_verified = false;
      attach_second_point(c, select(hyp, c.containing), seed, options);
      out.components.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace folres
