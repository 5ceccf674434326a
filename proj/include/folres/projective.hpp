#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folres/foliation.hpp"
#include "folres/indices.hpp"

namespace folres {

/// Homogeneous logarithmic presentation on P^n with its affine chart.
struct ProjectiveJob {
  std::vector<std::string> variables;
  std::vector<Polynomial> factors;
  std::vector<int> degrees;
  std::vector<Rational> weights;
  std::size_t chart = 0;
  /// d = sum d_j - 2
  int foliation_degree = 0;
  /// Factors with the chart coordinate set to 1, over the remaining variables.
  LogarithmicPresentation affine;
};

/// Errors: NotHomogeneous, EulerConditionFailed, InvalidPresentation, ChartMissesComponent.
ProjectiveJob validate_projective(const LogarithmicPresentation& homogeneous, std::size_t chart);

struct CheckTerm {
  std::string component;
  Rational index;
  int degree = 1;
};

struct GlobalCheckResult {
  std::string theorem;
  /// Empty for the Baum-Bott sum.
  std::string hypersurface;
  Rational lhs;
  Rational rhs;
  bool pass = false;
  std::vector<CheckTerm> breakdown;
};

struct FaultInjection {
  std::string hypersurface;
  std::string component;
  Rational delta;
};

struct ProjectiveOptions {
  IndexOptions indices;
  std::optional<FaultInjection> fault;
};

struct ProjectiveTable {
  ProjectiveJob job;
  Foliation foliation;
  ComponentSet components;
  IndexReport report;
  /// Var per (hypersurface, component) as used in the variational sums, after any fault injection.
  std::vector<IndexValue> var_table;
  std::vector<std::string> warnings;
};

/// Certifies every pairwise component in the chart, checks the arrangement is generic
/// (pairs of rank 2, triples of rank 3 where sampled) and computes all indices.
/// Errors: ChartMissesComponent, InvalidInput (non-generic arrangement), propagated.
ProjectiveTable compute_projective_table(const ProjectiveJob& job, const ProjectiveOptions& options);

/// sum_Z Var(V_j, Z) deg Z = (d + 2) deg V_j
GlobalCheckResult check_variational_sum(const ProjectiveTable& table, std::size_t j);
/// sum_Z GSV(V_j, Z) deg Z = (d + 2 - deg V_j) deg V_j
GlobalCheckResult check_gsv_sum(const ProjectiveTable& table, std::size_t j);
/// sum_Z CS(V_j, Z) deg Z = deg V_j^2
GlobalCheckResult check_cs_sum(const ProjectiveTable& table, std::size_t j);
/// sum_Z BB(Z) deg Z = (d + 2)^2
GlobalCheckResult check_bb_sum(const ProjectiveTable& table);

/// All four sums: variational, GSV and CS per hypersurface, then Baum-Bott.
std::vector<GlobalCheckResult> global_checks(const ProjectiveTable& table);

/// Whether the global sums agree exactly when computed in two charts.
bool charts_agree(const LogarithmicPresentation& homogeneous, std::size_t chart_a, std::size_t chart_b,
                  const ProjectiveOptions& options);

}  // namespace folres
