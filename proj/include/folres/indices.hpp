#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "folres/foliation.hpp"
#include "folres/localgeom.hpp"

namespace folres {

enum class IndexKind { Var, GSV, CS, BB };
enum class IndexMethod { Residue, ClosedForm, Liouville, Jacobian, FirstIntegral, Difference };

std::string_view index_kind_name(IndexKind kind) noexcept;
std::string_view index_method_name(IndexMethod method) noexcept;

struct IndexValue {
  IndexKind kind = IndexKind::Var;
  Rational value;
  IndexMethod method = IndexMethod::Residue;
  /// Hypersurface label; empty for BB.
  std::string hypersurface;
  std::string component;
  /// Ids of the certificate records backing the value.
  std::vector<std::string> certificates;
  std::optional<Rational> gauge;
  /// JX row-major, for the Jacobian method.
  std::optional<std::array<Rational, 4>> jacobian;
  /// False when Z is not contained in the hypersurface (the value is then 0).
  bool contained = true;
};

struct CertificateRecord {
  std::string id;
  std::string kind;
  std::vector<std::pair<std::string, std::string>> facts;
};

struct IndexOptions {
  int truncation = kDefaultTruncation;
  std::uint64_t seed = 1;
  int max_attempts = kDefaultMaxAttempts;
  bool double_check_points = true;
};

/// Residue of dh/h - dg/g - eta/h along the transverse curve in {f = 0}. The truncation
/// is doubled up to kMaxTruncation when the pole is not resolved.
IndexValue var_residue(const SaitoDecomposition& s, const SingularComponent& z, const GenericPointCertificate& cert,
                       int truncation = kDefaultTruncation);

/// sum_{l != j} (1 - lambda_l / lambda_j) ord_Z(f_l |V_j); 0 when Z is not in V_j.
IndexValue var_closed_form(const LogarithmicPresentation& p, std::size_t j, const SingularComponent& z,
                           const GenericPointCertificate& cert, int truncation = kDefaultTruncation);

/// Order of h/g along the transverse curve in {f = 0}.
IndexValue gsv(const SaitoDecomposition& s, const SingularComponent& z, const GenericPointCertificate& cert,
               int truncation = kDefaultTruncation);

/// Var - GSV; MismatchedComponent unless both refer to the same (V, Z).
IndexValue cs(const IndexValue& var, const IndexValue& gsv);

/// sum over the factors containing Z of Res(gamma0(t), V_j) * Var(V_j, Z).
IndexValue bb_liouville(const LogarithmicPresentation& p, const SingularComponent& z,
                        const GenericPointCertificate& cert, const Rational& t,
                        int truncation = kDefaultTruncation);

/// Tr(JX)^2 / det(JX) for the dual field of omega restricted to a transverse plane.
/// Errors: DegenerateLinearPart when every candidate plane gives det JX = 0.
IndexValue bb_jacobian(const OneForm& omega, const SingularComponent& z, const GenericPointCertificate& cert,
                       std::uint64_t seed, int max_attempts = kDefaultMaxAttempts);

/// -sum_{l<j} (m_l - m_j)^2 / (m_l m_j) ord_Z(g_j |V_l) over factors containing Z.
IndexValue bb_first_integral(const FirstIntegralPresentation& p, const SingularComponent& z,
                             const GenericPointCertificate& cert, int truncation = kDefaultTruncation);

struct AgreementFlag {
  std::string check;
  std::string component;
  std::string hypersurface;
  bool agree = true;
  std::string detail;
};

struct IndexReport {
  std::vector<IndexValue> values;
  std::vector<CertificateRecord> certificates;
  std::vector<AgreementFlag> agreement;
  std::vector<std::string> warnings;

  /// First value matching the filters; nullopt if none.
  std::optional<Rational> find(IndexKind kind, std::string_view component, std::string_view hypersurface = {},
                               std::optional<IndexMethod> method = std::nullopt) const;
  bool all_agree() const;
};

/// Every index by every applicable method, with cross-method and cross-point agreement.
IndexReport compute_indices(const Foliation& foliation, const ComponentSet& components, const IndexOptions& options);

/// Gauges probed for Liouville gauge invariance.
inline constexpr std::array<int, 4> kGaugeProbe{0, 1, 2, -1};

}  // namespace folres
