#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "folres/forms.hpp"
#include "folres/localgeom.hpp"
#include "folres/polynomial.hpp"

namespace folres {

/// omega = (prod f_j) * sum_j lambda_j df_j / f_j
struct LogarithmicPresentation {
  std::vector<std::string> variables;
  std::vector<Polynomial> factors;
  std::vector<Rational> weights;
  Rational gauge{1};

  /// Throws InvalidPresentation.
  void validate() const;
};

/// First integral prod g_j^(m_j).
struct FirstIntegralPresentation {
  std::vector<std::string> variables;
  std::vector<Polynomial> factors;
  std::vector<unsigned> multiplicities;

  void validate() const;
  LogarithmicPresentation to_logarithmic() const;
  Polynomial first_integral() const;
};

/// g * omega = h * df + f * eta along the invariant hypersurface {f = 0}.
struct SaitoDecomposition {
  std::string label;
  Polynomial g;
  Polynomial h;
  Polynomial f;
  OneForm eta;
};

struct ExplicitPresentation {
  OneForm omega;
  std::vector<SaitoDecomposition> saito;
};

using Presentation = std::variant<LogarithmicPresentation, FirstIntegralPresentation, ExplicitPresentation>;

OneForm build_omega(const LogarithmicPresentation& p);
OneForm build_omega(const FirstIntegralPresentation& p);

/// d(omega) = gamma0 ^ omega with gamma0 = sum_j (1 - t lambda_j) df_j / f_j and gamma1 = 0.
struct CofactorForm {
  Rational gauge;
  LogarithmicOneForm gamma0;
  OneForm gamma1;
};

/// Throws CofactorIdentityFailed if the wedge identity does not hold exactly.
CofactorForm cofactor(const LogarithmicPresentation& p, const Rational& t);

/// g = 1, h = lambda_j prod_{l != j} f_l, f = f_j, eta = sum_{l != j} lambda_l prod_{m != j,l} f_m df_l.
SaitoDecomposition canonical_saito(const LogarithmicPresentation& p, std::size_t j);

struct SaitoCertificate {
  std::string label;
  /// "sampled" when h, g were evaluated at random points of V, "curve" when tested along lifted curves.
  std::string method;
  std::vector<std::vector<Rational>> points;
};

/// Exact identity check plus non-vanishing of h and g on V. Curves through
/// `fallback_points` are used when V cannot be sampled.
/// Errors: SaitoIdentityFailed, SaitoCoprimalityFailed, UserPointRequired.
SaitoCertificate verify_saito(const SaitoDecomposition& s, const OneForm& omega, std::uint64_t seed,
                              int max_attempts = kDefaultMaxAttempts,
                              const std::vector<std::vector<Rational>>& fallback_points = {});

/// A validated presentation with its 1-form and invariant hypersurfaces.
struct Foliation {
  Presentation presentation;
  std::vector<std::string> variables;
  OneForm omega;
  std::vector<Polynomial> hypersurfaces;
  std::vector<std::string> labels;
  /// Set for logarithmic and first-integral presentations.
  std::optional<LogarithmicPresentation> logarithmic;

  bool has_first_integral() const { return std::holds_alternative<FirstIntegralPresentation>(presentation); }
};

/// Validates, builds omega and checks integrability. Throws NotIntegrable.
Foliation make_foliation(Presentation p);

struct DeclaredComponent {
  std::string label;
  std::array<Polynomial, 2> cut;
  std::optional<std::vector<Rational>> point;
  std::optional<int> degree;
};

struct SingularComponent {
  std::string label;
  std::array<Polynomial, 2> cut;
  GenericPointCertificate certificate;
  std::optional<GenericPointCertificate> second_certificate;
  int degree = 1;
  bool degree_verified = false;
  /// Indices of the invariant hypersurfaces containing Z.
  std::vector<std::size_t> containing;

  bool contained_in(std::size_t j) const;
};

struct EnumerationOptions {
  std::uint64_t seed = 1;
  int max_attempts = kDefaultMaxAttempts;
  int truncation = kDefaultTruncation;
  bool double_check_points = true;
  /// Turn skipped pairs into errors instead of warnings.
  bool strict = false;
};

struct ComponentSet {
  std::vector<SingularComponent> components;
  std::vector<std::string> warnings;
};

/// Auto mode (no declared list) intersects the factors pairwise; declared components
/// are validated. Errors: NoGenericPointFound, ComponentNotSingular, InvalidInput.
ComponentSet enumerate_components(const Foliation& foliation,
                                  const std::optional<std::vector<DeclaredComponent>>& declared,
                                  const EnumerationOptions& options);

}  // namespace folres
