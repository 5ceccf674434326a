#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "folres/forms.hpp"
#include "folres/polynomial.hpp"
#include "folres/rational_function.hpp"
#include "folres/series.hpp"

namespace folres {

inline constexpr int kDefaultTruncation = 16;
inline constexpr int kMaxTruncation = 256;
inline constexpr int kDefaultMaxAttempts = 8;

/// Exact witness that a rational point is a smooth point of Z = {p = q = 0}
/// avoiding a list of bad loci.
struct GenericPointCertificate {
  std::vector<Rational> point;
  std::array<Polynomial, 2> cut;
  /// Columns of the 2x2 Jacobian minor of (p, q) that is nonzero at the point.
  std::array<std::size_t, 2> minor_columns{0, 1};
  Rational minor;
  /// Polynomials verified nonzero at the point.
  std::vector<Polynomial> avoided;

  /// Re-verifies every listed fact by exact evaluation.
  bool recheck() const;
};

/// Dependent: the equations do not cut out a set of the expected codimension.
enum class PointSearchStatus { Found, NoPlan, Inconsistent, Dependent, Exhausted };

struct PointSearchResult {
  PointSearchStatus status = PointSearchStatus::Exhausted;
  std::vector<Rational> point;
};

/// Looks for a rational point of {equations = 0} avoiding the zero sets of `avoid`
/// by successive elimination of variables that occur to degree one. Attempt 0 sets
/// the free coordinates to 1 when allow_canonical is true; later attempts draw
/// small random integers from the seeded stream.
PointSearchResult find_point(std::span<const Polynomial> equations, std::span<const Polynomial> avoid,
                             std::uint64_t seed, int max_attempts, bool allow_canonical = true);

/// Rank of the Jacobian of the equations at a point.
std::size_t jacobian_rank(std::span<const Polynomial> equations, std::span<const Rational> point);

/// Certifies a given point; throws NoGenericPointFound naming the failed fact.
GenericPointCertificate certify_generic_point(const Polynomial& p, const Polynomial& q,
                                              std::span<const Polynomial> avoid, std::vector<Rational> point);

/// Generic point of {p = q = 0}. With a hint the point is only certified.
/// Errors: NoGenericPointFound, UserPointRequired.
GenericPointCertificate find_generic_point(const Polynomial& p, const Polynomial& q,
                                           std::span<const Polynomial> avoid, std::uint64_t seed,
                                           int max_attempts = kDefaultMaxAttempts,
                                           const std::optional<std::vector<Rational>>& hint = std::nullopt,
                                           bool allow_canonical = true);

/// Up to `count` distinct random points of the hypersurface {f = 0}.
std::vector<std::vector<Rational>> sample_hypersurface_points(const Polynomial& f, std::size_t count,
                                                              std::uint64_t seed, int max_attempts);

/// Curve c(t) inside {inside = 0}, through the certified point, crossing Z once.
struct TransverseCurve {
  GenericPointCertificate base;
  Polynomial inside;
  std::vector<Rational> direction;
  std::size_t correction_coordinate = 0;
  /// Index into base.cut of the cut polynomial with t-order exactly 1 along the curve.
  std::size_t transversal_cut = 0;
  std::vector<TruncatedSeries> series;

  int truncation() const { return series.empty() ? 0 : series.front().order(); }
  TransverseCurve relift(int truncation) const;
};

/// Tangent to {f = 0} at the certified point and transverse to Z, with exact
/// rational entries (gradient of a cut polynomial projected onto the tangent space).
std::vector<Rational> transverse_direction(const Polynomial& f, const GenericPointCertificate& cert);

/// Newton lifting order by order: c(t) = point + t*direction + sum_{k>=2} a_k t^k e
/// with f(c(t)) = 0 mod t^(N+1).
TransverseCurve lift_transverse_curve(const Polynomial& f, const GenericPointCertificate& cert,
                                      std::span<const Rational> direction, int truncation = kDefaultTruncation);

/// Newton lift of a curve through a common zero of the equations, tangent to all of
/// them along `direction`, with corrections in the given coordinates (one per equation).
std::vector<TruncatedSeries> lift_curve(std::span<const Polynomial> equations, std::span<const Rational> point,
                                        std::span<const Rational> direction,
                                        std::span<const std::size_t> correction_coordinates, int truncation);

/// Coordinate used for the corrections when lifting inside {f = 0}.
std::size_t correction_coordinate(const Polynomial& f, std::span<const Rational> point);

/// lift_transverse_curve along transverse_direction(f, cert).
TransverseCurve transverse_curve(const Polynomial& f, const GenericPointCertificate& cert,
                                 int truncation = kDefaultTruncation);

/// t-order of q along the curve, relifting at doubled truncation up to kMaxTruncation.
int vanishing_order(const Polynomial& q, const TransverseCurve& curve);
int vanishing_order(const RationalFunction& q, const TransverseCurve& curve);

/// Whether g vanishes identically on Z near the certified point: g must vanish at the
/// point and along a curve inside Z lifted in a generic tangent direction of Z.
bool vanishes_on_component(const Polynomial& g, const GenericPointCertificate& cert, std::uint64_t seed,
                           int truncation = kDefaultTruncation);

struct TransversePlane {
  AffinePlane plane;
  /// det [dp(u) dp(v); dq(u) dq(v)] at the base point, nonzero.
  Rational cut_jacobian;
};

/// Throws DegeneratePlane when the cut pair's Jacobian on (u, v) is singular.
TransversePlane certify_transverse_plane(const GenericPointCertificate& cert, std::vector<Rational> dir_s,
                                         std::vector<Rational> dir_t);

/// Certified planes in deterministic order: the gradient plane first, then random ones.
std::vector<TransversePlane> transverse_plane_candidates(const GenericPointCertificate& cert, std::uint64_t seed,
                                                         int max_attempts = kDefaultMaxAttempts);

/// First certified candidate; NoTransversePlaneFound if none.
TransversePlane build_transverse_plane(const GenericPointCertificate& cert, std::uint64_t seed,
                                       int max_attempts = kDefaultMaxAttempts);

/// Scales a nonzero rational vector to a primitive integer vector.
std::vector<Rational> primitive_vector(std::vector<Rational> v);

}  // namespace folres
