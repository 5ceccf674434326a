#include "folres/localgeom.hpp"

#include <algorithm>
#include <numeric>

#include "folres/error.hpp"
#include "folres/random.hpp"

namespace folres {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

std::vector<Rational> gradient(const Polynomial& f, std::span<const Rational> point) {
  std::vector<Rational> g;
  g.reserve(f.num_variables());
  for (std::size_t i = 0; i < f.num_variables(); ++i) g.push_back(f.derivative(i).evaluate(point));
  return g;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational sum(0);
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

std::size_t matrix_rank(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Solves the square system m x = rhs; nullopt when m is singular.
std::optional<std::vector<Rational>> solve(Matrix m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[c]);
    std::swap(rhs[pivot], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
      rhs[r] -= factor * rhs[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

// ---------------------------------------------------------------------------
// Elimination plans: each step solves one equation a*v + b = 0 for a variable v
// occurring to degree one, and the remaining equations are cleared of v.

struct Step {
  std::size_t var;
  Polynomial a;
  Polynomial b;
};

struct Plan {
  PointSearchStatus status = PointSearchStatus::NoPlan;
  std::vector<Step> steps;
  std::vector<std::size_t> free_vars;
};

Polynomial eliminate(const Polynomial& eq, std::size_t var, const Polynomial& a, const Polynomial& b) {
  const auto coeffs = eq.coefficients_in(var);
  if (coeffs.size() <= 1) return eq;
  const std::size_t degree = coeffs.size() - 1;
  std::vector<Polynomial> a_pow{Polynomial::constant(eq.variables(), Rational(1))};
  std::vector<Polynomial> nb_pow{a_pow.front()};
  for (std::size_t k = 1; k <= degree; ++k) {
    a_pow.push_back(a_pow.back() * a);
    nb_pow.push_back(nb_pow.back() * (-b));
  }
  Polynomial out(eq.variables());
  for (std::size_t e = 0; e <= degree; ++e) {
    if (!coeffs[e].is_zero()) out += coeffs[e] * nb_pow[e] * a_pow[degree - e];
  }
  return out;
}

struct Candidate {
  std::size_t var;
  int a_degree;
};

bool plan_search(const std::vector<Polynomial>& equations, std::vector<Step>& steps, PointSearchStatus& worst) {
  if (equations.empty()) return true;
  for (const auto& eq : equations) {
    if (eq.is_zero()) {
      worst = PointSearchStatus::Dependent;
      return false;
    }
    if (eq.is_constant()) {
      if (worst != PointSearchStatus::Dependent) worst = PointSearchStatus::Inconsistent;
      return false;
    }
  }
  for (std::size_t i = 0; i < equations.size(); ++i) {
    const Polynomial& eq = equations[i];
    std::vector<Candidate> candidates;
    for (std::size_t v = 0; v < eq.num_variables(); ++v) {
      if (eq.degree_in(v) != 1) continue;
      candidates.push_back({v, eq.coefficients_in(v)[1].total_degree()});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& x, const Candidate& y) { return x.a_degree < y.a_degree; });
    for (const auto& cand : candidates) {
      const auto coeffs = eq.coefficients_in(cand.var);
      Step step{cand.var, coeffs[1], coeffs[0]};
      std::vector<Polynomial> rest;
      for (std::size_t j = 0; j < equations.size(); ++j) {
        if (j != i) rest.push_back(eliminate(equations[j], step.var, step.a, step.b));
      }
      steps.push_back(step);
      if (plan_search(rest, steps, worst)) return true;
      steps.pop_back();
    }
  }
  return false;
}

Plan make_plan(std::span<const Polynomial> equations) {
  Plan plan;
  if (equations.empty()) {
    plan.status = PointSearchStatus::Dependent;
    return plan;
  }
  const std::size_t n = equations.front().num_variables();
  PointSearchStatus worst = PointSearchStatus::NoPlan;
  std::vector<Polynomial> eqs(equations.begin(), equations.end());
  if (!plan_search(eqs, plan.steps, worst)) {
    plan.status = worst;
    plan.steps.clear();
    return plan;
  }
  plan.status = PointSearchStatus::Found;
  std::vector<bool> bound(n, false);
  for (const auto& s : plan.steps) bound[s.var] = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (!bound[v]) plan.free_vars.push_back(v);
  }
  return plan;
}

/// Completes the free coordinates to a point; nullopt if a pivot coefficient vanishes.
std::optional<std::vector<Rational>> realize(const Plan& plan, std::size_t n, const std::vector<Rational>& free_values) {
  std::vector<Rational> point(n, Rational(0));
  for (std::size_t k = 0; k < plan.free_vars.size(); ++k) point[plan.free_vars[k]] = free_values[k];
  for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it) {
    const Rational a = it->a.evaluate(point);
    if (a == 0) return std::nullopt;
    point[it->var] = -it->b.evaluate(point) / a;
  }
  return point;
}

bool avoids(std::span<const Polynomial> avoid, std::span<const Rational> point) {
  return std::all_of(avoid.begin(), avoid.end(), [&](const Polynomial& g) { return g.evaluate(point) != 0; });
}

bool vanishes(std::span<const Polynomial> equations, std::span<const Rational> point) {
  return std::all_of(equations.begin(), equations.end(), [&](const Polynomial& g) { return g.evaluate(point) == 0; });
}

template <typename Accept>
PointSearchResult search(std::span<const Polynomial> equations, std::uint64_t seed, int max_attempts,
                         bool allow_canonical, Accept accept) {
  PointSearchResult result;
  const Plan plan = make_plan(equations);
  if (plan.status != PointSearchStatus::Found) {
    result.status = plan.status;
    return result;
  }
  const std::size_t n = equations.front().num_variables();
  RandomStream rng = RandomStream(seed).split("point-search");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Rational> free_values;
    for (std::size_t k = 0; k < plan.free_vars.size(); ++k) {
      free_values.emplace_back(attempt == 0 && allow_canonical ? 1 : rng.small_int());
    }
    auto point = realize(plan, n, free_values);
    if (!point || !vanishes(equations, *point) || !accept(*point)) continue;
    result.status = PointSearchStatus::Found;
    result.point = std::move(*point);
    return result;
  }
  result.status = PointSearchStatus::Exhausted;
  return result;
}

Matrix jacobian_at(std::span<const Polynomial> equations, std::span<const Rational> point) {
  Matrix m;
  for (const auto& eq : equations) m.push_back(gradient(eq, point));
  return m;
}

std::string point_string(std::span<const Rational> point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ", ";
    out += to_string(point[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

std::vector<TruncatedSeries> newton_lift_impl(std::span<const Polynomial> equations, std::span<const Rational> point,
                                         std::span<const Rational> direction, std::span<const std::size_t> coords,
                                         int truncation) {
  if (truncation < 1) throw Error(ErrorCode::InvalidInput, "truncation order must be positive");
  if (truncation > kMaxTruncation) {
    throw Error(ErrorCode::OrderExceedsTruncation, "truncation order above " + std::to_string(kMaxTruncation));
  }
  const std::size_t n = point.size();
  const std::size_t r = equations.size();
  for (const auto& eq : equations) {
    if (eq.evaluate(point) != 0) {
      throw Error(ErrorCode::NotOnHypersurface, eq.to_string() + " does not vanish at " + point_string(point));
    }
    if (dot(gradient(eq, point), direction) != 0) {
      throw Error(ErrorCode::InvalidInput, "direction is not tangent to {" + eq.to_string() + " = 0}");
    }
  }
  Matrix js(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) js[i][j] = equations[i].derivative(coords[j]).evaluate(point);
  }
  if (matrix_rank(js) < r) throw Error(ErrorCode::NewtonBreakdown, "singular correction Jacobian");

  std::vector<std::vector<Rational>> coef(n, std::vector<Rational>(truncation + 1, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    coef[i][0] = point[i];
    coef[i][1] = direction[i];
  }
  auto series_at = [&](int order) {
    std::vector<TruncatedSeries> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      c.emplace_back(std::vector<Rational>(coef[i].begin(), coef[i].begin() + order + 1), order);
    }
    return c;
  };
  for (int k = 2; k <= truncation; ++k) {
    const auto c = series_at(k);
    std::vector<Rational> rhs;
    for (const auto& eq : equations) rhs.push_back(-eq.evaluate(c)[static_cast<std::size_t>(k)]);
    const auto a = solve(js, rhs);
    if (!a) throw Error(ErrorCode::NewtonBreakdown, "singular correction Jacobian");
    for (std::size_t j = 0; j < r; ++j) coef[coords[j]][static_cast<std::size_t>(k)] += (*a)[j];
  }
  auto curve = series_at(truncation);
  for (const auto& eq : equations) {
    if (!eq.evaluate(curve).is_zero()) {
      throw Error(ErrorCode::NewtonBreakdown, "lifted curve leaves {" + eq.to_string() + " = 0}");
    }
  }
  return curve;
}

std::size_t pick_correction_coordinate_impl(const Polynomial& f, std::span<const Rational> point) {
  const auto grad = gradient(f, point);
  for (std::size_t i = 0; i < grad.size(); ++i) {
    if (grad[i] != 0 && f.degree_in(i) == 1) return i;
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < grad.size(); ++i) {
    if (abs(grad[i]) > abs(grad[best])) best = i;
  }
  return best;
}

}  // namespace

std::vector<TruncatedSeries> lift_curve(std::span<const Polynomial> equations, std::span<const Rational> point,
                                        std::span<const Rational> direction,
                                        std::span<const std::size_t> correction_coordinates, int truncation) {
  if (correction_coordinates.size() != equations.size()) {
    throw Error(ErrorCode::InvalidInput, "need one correction coordinate per equation");
  }
  return newton_lift_impl(equations, point, direction, correction_coordinates, truncation);
}

std::size_t correction_coordinate(const Polynomial& f, std::span<const Rational> point) {
  return pick_correction_coordinate_impl(f, point);
}

bool GenericPointCertificate::recheck() const {
  if (cut[0].evaluate(point) != 0 || cut[1].evaluate(point) != 0) return false;
  const auto gp = gradient(cut[0], point);
  const auto gq = gradient(cut[1], point);
  const auto [i, j] = minor_columns;
  const Rational m = gp[i] * gq[j] - gp[j] * gq[i];
  return m != 0 && m == minor && avoids(avoided, point);
}

PointSearchResult find_point(std::span<const Polynomial> equations, std::span<const Polynomial> avoid,
                             std::uint64_t seed, int max_attempts, bool allow_canonical) {
  return search(equations, seed, max_attempts, allow_canonical,
                [&](const std::vector<Rational>& p) { return avoids(avoid, p); });
}

std::size_t jacobian_rank(std::span<const Polynomial> equations, std::span<const Rational> point) {
  return matrix_rank(jacobian_at(equations, point));
}

GenericPointCertificate certify_generic_point(const Polynomial& p, const Polynomial& q,
                                              std::span<const Polynomial> avoid, std::vector<Rational> point) {
  if (point.size() != p.num_variables()) {
    throw Error(ErrorCode::VariableMismatch, "point has the wrong number of coordinates");
  }
  const std::string where = " at " + point_string(point);
  if (p.evaluate(point) != 0) throw Error(ErrorCode::NoGenericPointFound, p.to_string() + " is nonzero" + where);
  if (q.evaluate(point) != 0) throw Error(ErrorCode::NoGenericPointFound, q.to_string() + " is nonzero" + where);
  GenericPointCertificate cert;
  cert.cut = {p, q};
  const auto gp = gradient(p, point);
  const auto gq = gradient(q, point);
  bool found = false;
  for (std::size_t i = 0; i < gp.size() && !found; ++i) {
    for (std::size_t j = i + 1; j < gp.size() && !found; ++j) {
      const Rational m = gp[i] * gq[j] - gp[j] * gq[i];
      if (m != 0) {
        cert.minor_columns = {i, j};
        cert.minor = m;
        found = true;
      }
    }
  }
  if (!found) throw Error(ErrorCode::NoGenericPointFound, "Jacobian of the cut pair has rank < 2" + where);
  for (const auto& g : avoid) {
    if (g.evaluate(point) == 0) {
      throw Error(ErrorCode::NoGenericPointFound, "avoided polynomial " + g.to_string() + " vanishes" + where);
    }
  }
  cert.avoided.assign(avoid.begin(), avoid.end());
  cert.point = std::move(point);
  return cert;
}

GenericPointCertificate find_generic_point(const Polynomial& p, const Polynomial& q,
                                           std::span<const Polynomial> avoid, std::uint64_t seed, int max_attempts,
                                           const std::optional<std::vector<Rational>>& hint, bool allow_canonical) {
  if (p.is_constant() || q.is_constant()) {
    throw Error(ErrorCode::InvalidInput, "cut polynomials must be nonconstant");
  }
  if (hint) return certify_generic_point(p, q, avoid, *hint);
  const std::array<Polynomial, 2> eqs{p, q};
  const auto result = search(std::span<const Polynomial>(eqs), seed, max_attempts, allow_canonical,
                             [&](const std::vector<Rational>& pt) {
                               return avoids(avoid, pt) && jacobian_rank(eqs, pt) == 2;
                             });
  const std::string z = "{" + p.to_string() + " = " + q.to_string() + " = 0}";
  switch (result.status) {
    case PointSearchStatus::Found:
      return certify_generic_point(p, q, avoid, result.point);
    case PointSearchStatus::NoPlan:
      throw Error(ErrorCode::UserPointRequired, "cannot parametrize " + z + "; supply generic_point");
    case PointSearchStatus::Inconsistent:
      throw Error(ErrorCode::NoGenericPointFound, z + " is empty in this chart");
    case PointSearchStatus::Dependent:
      throw Error(ErrorCode::NoGenericPointFound, z + " is not of codimension two; rank 2 impossible");
    case PointSearchStatus::Exhausted:
      break;
  }
  throw Error(ErrorCode::NoGenericPointFound,
              "no certified point of " + z + " after " + std::to_string(max_attempts) + " attempts");
}

std::vector<std::vector<Rational>> sample_hypersurface_points(const Polynomial& f, std::size_t count,
                                                              std::uint64_t seed, int max_attempts) {
  std::vector<std::vector<Rational>> points;
  const std::array<Polynomial, 1> eqs{f};
  const Plan plan = make_plan(eqs);
  if (plan.status != PointSearchStatus::Found) return points;
  RandomStream rng = RandomStream(seed).split("hypersurface-sample");
  const int budget = max_attempts * static_cast<int>(std::max<std::size_t>(count, 1));
  for (int attempt = 0; attempt < budget && points.size() < count; ++attempt) {
    std::vector<Rational> free_values;
    for (std::size_t k = 0; k < plan.free_vars.size(); ++k) free_values.emplace_back(rng.small_int());
    auto point = realize(plan, f.num_variables(), free_values);
    if (!point || f.evaluate(*point) != 0) continue;
    if (std::find(points.begin(), points.end(), *point) != points.end()) continue;
    points.push_back(std::move(*point));
  }
  return points;
}

// ---------------------------------------------------------------------------

std::vector<Rational> primitive_vector(std::vector<Rational> v) {
  Integer lcm_den(1);
  for (const auto& x : v) {
    if (x != 0) lcm_den = lcm(lcm_den, Integer(x.get_den()));
  }
  Integer gcd_num(0);
  for (auto& x : v) {
    x *= lcm_den;
    if (x != 0) gcd_num = gcd(gcd_num, Integer(x.get_num()));
  }
  if (gcd_num == 0) throw Error(ErrorCode::InvalidInput, "zero vector");
  for (auto& x : v) x /= gcd_num;
  return v;
}

std::vector<Rational> transverse_direction(const Polynomial& f, const GenericPointCertificate& cert) {
  if (f.evaluate(cert.point) != 0) {
    throw Error(ErrorCode::NotOnHypersurface, f.to_string() + " does not vanish at " + point_string(cert.point));
  }
  const auto gf = gradient(f, cert.point);
  const Rational norm = dot(gf, gf);
  if (norm == 0) {
    throw Error(ErrorCode::UserPointRequired,
                "{" + f.to_string() + " = 0} is singular at " + point_string(cert.point));
  }
  for (const auto& g : cert.cut) {
    const auto gg = gradient(g, cert.point);
    const Rational proj = dot(gg, gf) / norm;
    std::vector<Rational> d(gg.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = gg[i] - proj * gf[i];
    if (dot(gg, d) != 0) return primitive_vector(std::move(d));
  }
  throw Error(ErrorCode::InvalidInput, "{" + f.to_string() + " = 0} is not transverse-cuttable along Z");
}

TransverseCurve lift_transverse_curve(const Polynomial& f, const GenericPointCertificate& cert,
                                      std::span<const Rational> direction, int truncation) {
  TransverseCurve curve;
  curve.base = cert;
  curve.inside = f;
  curve.direction.assign(direction.begin(), direction.end());
  if (f.evaluate(cert.point) != 0) {
    throw Error(ErrorCode::NotOnHypersurface, f.to_string() + " does not vanish at " + point_string(cert.point));
  }
  const auto gf = gradient(f, cert.point);
  if (std::all_of(gf.begin(), gf.end(), [](const Rational& x) { return x == 0; })) {
    throw Error(ErrorCode::UserPointRequired,
                "{" + f.to_string() + " = 0} is singular at " + point_string(cert.point));
  }
  bool transverse = false;
  for (std::size_t k = 0; k < 2 && !transverse; ++k) {
    if (dot(gradient(cert.cut[k], cert.point), direction) != 0) {
      curve.transversal_cut = k;
      transverse = true;
    }
  }
  if (!transverse) throw Error(ErrorCode::InvalidInput, "direction is tangent to Z");
  curve.correction_coordinate = correction_coordinate(f, cert.point);
  const std::array<Polynomial, 1> eqs{f};
  const std::array<std::size_t, 1> coords{curve.correction_coordinate};
  curve.series = lift_curve(eqs, cert.point, direction, coords, truncation);
  return curve;
}

TransverseCurve transverse_curve(const Polynomial& f, const GenericPointCertificate& cert, int truncation) {
  return lift_transverse_curve(f, cert, transverse_direction(f, cert), truncation);
}

TransverseCurve TransverseCurve::relift(int truncation) const {
  return lift_transverse_curve(inside, base, direction, truncation);
}

namespace {

int first_nonzero(const TruncatedSeries& s) {
  for (int k = 0; k <= s.order(); ++k) {
    if (s[static_cast<std::size_t>(k)] != 0) return k;
  }
  return -1;
}

int escalating_order(const Polynomial& q, const TransverseCurve& curve) {
  if (q.is_zero()) throw Error(ErrorCode::OrderExceedsTruncation, "order of the zero polynomial");
  int order = first_nonzero(q.evaluate(curve.series));
  if (order >= 0) return order;
  for (int n = curve.truncation() * 2; n <= kMaxTruncation; n *= 2) {
    const auto lifted = curve.relift(n);
    order = first_nonzero(q.evaluate(lifted.series));
    if (order >= 0) return order;
  }
  throw Error(ErrorCode::OrderExceedsTruncation,
              q.to_string() + " vanishes along the curve through t^" + std::to_string(kMaxTruncation));
}

}  // namespace

int vanishing_order(const Polynomial& q, const TransverseCurve& curve) { return escalating_order(q, curve); }

int vanishing_order(const RationalFunction& q, const TransverseCurve& curve) {
  return escalating_order(q.numerator(), curve) - escalating_order(q.denominator(), curve);
}

bool vanishes_on_component(const Polynomial& g, const GenericPointCertificate& cert, std::uint64_t seed,
                           int truncation) {
  if (g.evaluate(cert.point) != 0) return false;
  const std::size_t n = cert.point.size();
  if (n <= 2) return true;
  const auto [ci, cj] = cert.minor_columns;
  const auto gp = gradient(cert.cut[0], cert.point);
  const auto gq = gradient(cert.cut[1], cert.point);
  RandomStream rng = RandomStream(seed).split("component-tangent");
  std::vector<Rational> d(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    if (k != ci && k != cj) d[k] = rng.nonzero_int();
  }
  std::vector<Rational> rhs{-dot(gp, d), -dot(gq, d)};
  const auto sol = solve({{gp[ci], gp[cj]}, {gq[ci], gq[cj]}}, rhs);
  if (!sol) throw Error(ErrorCode::NewtonBreakdown, "certificate minor is singular");
  d[ci] = (*sol)[0];
  d[cj] = (*sol)[1];
  const int depth = std::clamp(std::max(truncation, 2 * std::max(g.total_degree(), 1) + 2), 1, kMaxTruncation);
  const std::array<std::size_t, 2> coords{ci, cj};
  const auto curve = lift_curve(cert.cut, cert.point, d, coords, depth);
  return g.evaluate(curve).is_zero();
}

// ---------------------------------------------------------------------------

TransversePlane certify_transverse_plane(const GenericPointCertificate& cert, std::vector<Rational> dir_s,
                                         std::vector<Rational> dir_t) {
  const std::size_t n = cert.point.size();
  if (dir_s.size() != n || dir_t.size() != n) throw Error(ErrorCode::DegeneratePlane, "direction of wrong size");
  const auto gp = gradient(cert.cut[0], cert.point);
  const auto gq = gradient(cert.cut[1], cert.point);
  const Rational det = dot(gp, dir_s) * dot(gq, dir_t) - dot(gp, dir_t) * dot(gq, dir_s);
  if (det == 0) throw Error(ErrorCode::DegeneratePlane, "cut-pair Jacobian is singular on the plane directions");
  return TransversePlane{AffinePlane{cert.point, std::move(dir_s), std::move(dir_t)}, det};
}

std::vector<TransversePlane> transverse_plane_candidates(const GenericPointCertificate& cert, std::uint64_t seed,
                                                         int max_attempts) {
  std::vector<TransversePlane> planes;
  if (max_attempts <= 0) return planes;
  try {
    planes.push_back(certify_transverse_plane(cert, primitive_vector(gradient(cert.cut[0], cert.point)),
                                              primitive_vector(gradient(cert.cut[1], cert.point))));
  } catch (const Error&) {
  }
  RandomStream rng = RandomStream(seed).split("transverse-plane");
  const std::size_t n = cert.point.size();
  for (int attempt = 1; attempt < max_attempts; ++attempt) {
    std::vector<Rational> u(n);
    std::vector<Rational> v(n);
    for (auto& x : u) x = rng.small_int();
    for (auto& x : v) x = rng.small_int();
    try {
      planes.push_back(certify_transverse_plane(cert, std::move(u), std::move(v)));
    } catch (const Error&) {
    }
  }
  return planes;
}

TransversePlane build_transverse_plane(const GenericPointCertificate& cert, std::uint64_t seed, int max_attempts) {
  auto planes = transverse_plane_candidates(cert, seed, max_attempts);
  if (planes.empty()) {
    throw Error(ErrorCode::NoTransversePlaneFound,
                "no certified plane after " + std::to_string(max_attempts) + " attempts");
  }
  return planes.front();
}

}  // namespace folres
