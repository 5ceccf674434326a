#include "folres/projective.hpp"

#include <algorithm>

#include "folres/error.hpp"
#include "folres/random.hpp"

namespace folres {

ProjectiveJob validate_projective(const LogarithmicPresentation& homogeneous, std::size_t chart) {
  homogeneous.validate();
  const auto& vars = homogeneous.variables;
  if (chart >= vars.size()) throw Error(ErrorCode::InvalidInput, "chart index out of range");
  if (vars.size() < 3) throw Error(ErrorCode::InvalidInput, "projective jobs need at least three variables");
  ProjectiveJob job;
  job.variables = vars;
  job.factors = homogeneous.factors;
  job.weights = homogeneous.weights;
  job.chart = chart;
  Rational euler(0);
  int total = 0;
  for (std::size_t j = 0; j < job.factors.size(); ++j) {
    const Polynomial& f = job.factors[j];
    if (!f.is_homogeneous()) {
      throw Error(ErrorCode::NotHomogeneous, "factor " + std::to_string(j + 1) + " (" + f.to_string() + ")");
    }
    const int d = f.total_degree();
    job.degrees.push_back(d);
    total += d;
    euler += job.weights[j] * d;
  }
  if (euler != 0) {
    throw Error(ErrorCode::EulerConditionFailed, "sum of weight * degree is " + to_string(euler) + ", not 0");
  }
  job.foliation_degree = total - 2;
  if (job.foliation_degree < 0) throw Error(ErrorCode::InvalidPresentation, "negative foliation degree");

  std::vector<std::string> affine_vars;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i != chart) affine_vars.push_back(vars[i]);
  }
  std::vector<Polynomial> images;
  for (std::size_t i = 0, k = 0; i < vars.size(); ++i) {
    images.push_back(i == chart ? Polynomial::constant(affine_vars, Rational(1))
                                : Polynomial::variable(affine_vars, k++));
  }
  job.affine = LogarithmicPresentation{affine_vars, {}, job.weights, homogeneous.gauge};
  for (std::size_t j = 0; j < job.factors.size(); ++j) {
    Polynomial f = job.factors[j].substitute(images);
    if (f.is_constant()) {
      throw Error(ErrorCode::ChartMissesComponent,
                  "V" + std::to_string(j + 1) + " is the hyperplane at infinity of the chart " + vars[chart] + " = 1");
    }
    job.affine.factors.push_back(std::move(f));
  }
  job.affine.validate();
  return job;
}

namespace {

std::string names(const std::vector<std::size_t>& idx) {
  std::string out;
  for (auto k : idx) out += (out.empty() ? "V" : ",V") + std::to_string(k + 1);
  return out;
}

void certify_arrangement(const ProjectiveJob& job, const IndexOptions& options, std::vector<std::string>& warnings) {
  const auto& f = job.affine.factors;
  const std::size_t k = f.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const std::array<Polynomial, 2> pair{f[i], f[j]};
      const auto r = find_point(pair, {}, options.seed, 1);
      if (r.status == PointSearchStatus::Inconsistent) {
        throw Error(ErrorCode::ChartMissesComponent,
                    names({i, j}) + " meet only at infinity of the chart " + job.variables[job.chart] + " = 1");
      }
      if (r.status == PointSearchStatus::Dependent) {
        throw Error(ErrorCode::InvalidInput, "non-generic arrangement: " + names({i, j}) + " share a hypersurface");
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      for (std::size_t c = b + 1; c < k; ++c) {
        const std::array<Polynomial, 3> triple{f[a], f[b], f[c]};
        const auto seed = RandomStream(options.seed).split("triple/" + names({a, b, c})).seed();
        const auto r = find_point(triple, {}, seed, options.max_attempts);
        switch (r.status) {
          case PointSearchStatus::Found:
            if (jacobian_rank(triple, r.point) < std::min<std::size_t>(3, job.affine.variables.size())) {
              throw Error(ErrorCode::InvalidInput,
                          "non-generic arrangement: " + names({a, b, c}) + " are not transverse");
            }
            break;
          case PointSearchStatus::Dependent:
            throw Error(ErrorCode::InvalidInput,
                        "non-generic arrangement: " + names({a, b, c}) + " meet in codimension two");
          case PointSearchStatus::Inconsistent:
            break;
          case PointSearchStatus::NoPlan:
          case PointSearchStatus::Exhausted:
            warnings.push_back("triple intersection " + names({a, b, c}) + " could not be sampled");
            break;
        }
      }
    }
  }
}

}  // namespace

ProjectiveTable compute_projective_table(const ProjectiveJob& job, const ProjectiveOptions& options) {
  ProjectiveTable table;
  table.job = job;
  certify_arrangement(job, options.indices, table.warnings);
  table.foliation = make_foliation(job.affine);
  EnumerationOptions eo;
  eo.seed = options.indices.seed;
  eo.max_attempts = options.indices.max_attempts;
  eo.truncation = options.indices.truncation;
  eo.double_check_points = options.indices.double_check_points;
  eo.strict = true;
  table.components = enumerate_components(table.foliation, std::nullopt, eo);
  const std::size_t k = job.factors.size();
  if (table.components.components.size() != k * (k - 1) / 2 || !table.components.warnings.empty()) {
    throw Error(ErrorCode::InvalidInput, "non-generic arrangement: pairwise intersections are not distinct components");
  }
  for (auto& z : table.components.components) {
    if (z.containing.size() != 2) {
      throw Error(ErrorCode::InvalidInput, "non-generic arrangement: " + z.label + " lies on " + names(z.containing));
    }
    z.degree = job.degrees[z.containing[0]] * job.degrees[z.containing[1]];
    z.degree_verified = true;
  }
  table.report = compute_indices(table.foliation, table.components, options.indices);
  for (const auto& w : table.warnings) table.report.warnings.push_back(w);

  for (const auto& v : table.report.values) {
    if (v.kind == IndexKind::Var && (v.method == IndexMethod::Residue || !v.contained)) table.var_table.push_back(v);
  }
  if (options.fault) {
    bool hit = false;
    for (auto& v : table.var_table) {
      if (v.contained && v.hypersurface == options.fault->hypersurface && v.component == options.fault->component) {
        v.value += options.fault->delta;
        hit = true;
      }
    }
    if (!hit) {
      throw Error(ErrorCode::InvalidInput, "fault injection target (" + options.fault->hypersurface + ", " +
                                               options.fault->component + ") is not a term of any variational sum");
    }
    table.report.warnings.push_back("fault injected into Var(" + options.fault->hypersurface + ", " +
                                    options.fault->component + ") by " + to_string(options.fault->delta));
  }
  return table;
}

namespace {

const SingularComponent& component_named(const ProjectiveTable& table, const std::string& label) {
  for (const auto& z : table.components.components) {
    if (z.label == label) return z;
  }
  throw Error(ErrorCode::MismatchedComponent, "unknown component " + label);
}

GlobalCheckResult finish(std::string theorem, std::string hypersurface, std::vector<CheckTerm> terms, Rational rhs) {
  GlobalCheckResult r;
  r.theorem = std::move(theorem);
  r.hypersurface = std::move(hypersurface);
  r.lhs = 0;
  for (const auto& t : terms) r.lhs += t.index * t.degree;
  r.rhs = std::move(rhs);
  r.pass = r.lhs == r.rhs;
  r.breakdown = std::move(terms);
  return r;
}

std::vector<CheckTerm> per_hypersurface(const ProjectiveTable& table, std::size_t j, IndexKind kind) {
  const std::string& v = table.foliation.labels.at(j);
  std::vector<CheckTerm> terms;
  for (const auto& z : table.components.components) {
    if (!z.contained_in(j)) continue;
    std::optional<Rational> value;
    if (kind == IndexKind::Var) {
      for (const auto& e : table.var_table) {
        if (e.hypersurface == v && e.component == z.label) value = e.value;
      }
    } else {
      value = table.report.find(kind, z.label, v);
    }
    if (!value) throw Error(ErrorCode::CheckFailed, "missing " + std::string(index_kind_name(kind)) + " at " + z.label);
    terms.push_back({z.label, *value, component_named(table, z.label).degree});
  }
  return terms;
}

}  // namespace

GlobalCheckResult check_variational_sum(const ProjectiveTable& table, std::size_t j) {
  const int d = table.job.foliation_degree;
  return finish("variational_sum", table.foliation.labels.at(j), per_hypersurface(table, j, IndexKind::Var),
                Rational((d + 2) * table.job.degrees.at(j)));
}

GlobalCheckResult check_gsv_sum(const ProjectiveTable& table, std::size_t j) {
  const int d = table.job.foliation_degree;
  const int m = table.job.degrees.at(j);
  return finish("gsv_sum", table.foliation.labels.at(j), per_hypersurface(table, j, IndexKind::GSV),
                Rational((d + 2 - m) * m));
}

GlobalCheckResult check_cs_sum(const ProjectiveTable& table, std::size_t j) {
  const int m = table.job.degrees.at(j);
  return finish("cs_sum", table.foliation.labels.at(j), per_hypersurface(table, j, IndexKind::CS), Rational(m * m));
}

GlobalCheckResult check_bb_sum(const ProjectiveTable& table) {
  std::vector<CheckTerm> terms;
  for (const auto& z : table.components.components) {
    const auto value = table.report.find(IndexKind::BB, z.label, {}, IndexMethod::Liouville);
    if (!value) throw Error(ErrorCode::CheckFailed, "missing BB at " + z.label);
    terms.push_back({z.label, *value, z.degree});
  }
  const int d = table.job.foliation_degree;
  return finish("bb_sum", "", std::move(terms), Rational((d + 2) * (d + 2)));
}

std::vector<GlobalCheckResult> global_checks(const ProjectiveTable& table) {
  std::vector<GlobalCheckResult> out;
  const std::size_t k = table.job.factors.size();
  for (std::size_t j = 0; j < k; ++j) out.push_back(check_variational_sum(table, j));
  for (std::size_t j = 0; j < k; ++j) out.push_back(check_gsv_sum(table, j));
  for (std::size_t j = 0; j < k; ++j) out.push_back(check_cs_sum(table, j));
  out.push_back(check_bb_sum(table));
  return out;
}

bool charts_agree(const LogarithmicPresentation& homogeneous, std::size_t chart_a, std::size_t chart_b,
                  const ProjectiveOptions& options) {
  const auto a = global_checks(compute_projective_table(validate_projective(homogeneous, chart_a), options));
  const auto b = global_checks(compute_projective_table(validate_projective(homogeneous, chart_b), options));
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].theorem != b[i].theorem || a[i].lhs != b[i].lhs || a[i].rhs != b[i].rhs) return false;
  }
  return true;
}

}  // namespace folres
