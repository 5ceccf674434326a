#include "folres/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "folres/error.hpp"
#include "folres/parser.hpp"
#include "folres/random.hpp"
#include "json_internal.hpp"

namespace folres {

namespace {

using detail::Json;
using detail::rational_json;

Json point_json(std::span<const Rational> point) {
  Json out = Json::array();
  for (const auto& x : point) out.push_back(rational_json(x));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::size_t chart_index(const JobFile& job) {
  const auto it = std::find(job.variables.begin(), job.variables.end(), job.projective->chart);
  return static_cast<std::size_t>(it - job.variables.begin());
}

EnumerationOptions enumeration_options(const IndexOptions& o) {
  EnumerationOptions eo;
  eo.seed = o.seed;
  eo.max_attempts = o.max_attempts;
  eo.truncation = o.truncation;
  eo.double_check_points = o.double_check_points;
  return eo;
}

class Report {
 public:
  Report(Command command, const JobFile& job) {
    json_["command"] = command_name(command);
    json_["exit_code"] = kExitOk;
    json_["input"] = detail::job_to_json(job);
    json_["assumptions"] =
        Json::array({"S(F) = Sing(F): the zero set of the defining forms is assumed to be the singular set; not checked"});
    json_["diagnostics"] = Json::array();
    json_["cofactor"] = nullptr;
    json_["components"] = Json::array();
    json_["indices"] = Json::array();
    json_["global_checks"] = Json::array();
    json_["agreement"] = Json::array();
    json_["assertions"] = Json::array();
    json_["certificates"] = Json::array();
    json_["warnings"] = Json::array();
    json_["error"] = nullptr;
  }

  Json& operator[](const char* key) { return json_[key]; }

  void diagnostic(const std::string& name, bool pass, const std::string& detail) {
    json_["diagnostics"].push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    if (!pass) failed_ = true;
  }

  void assertion(const std::string& name, const std::string& expected, const std::string& actual) {
    const bool pass = expected == actual;
    json_["assertions"].push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", pass}});
    if (!pass) failed_ = true;
  }

  void cofactor_block(const LogarithmicPresentation& p, const std::vector<std::string>& labels) {
    const CofactorForm c = cofactor(p, p.gauge);
    Json residues = Json::array();
    for (std::size_t j = 0; j < p.factors.size(); ++j) {
      residues.push_back({{"hypersurface", labels[j]}, {"residue", rational_json(c.gamma0.residue_along(p.factors[j]))}});
    }
    json_["cofactor"] = {{"gauge", rational_json(p.gauge)}, {"residues", std::move(residues)}};
  }

  void components(const Foliation& fol, const ComponentSet& set) {
    for (const auto& z : set.components) {
      Json c;
      c["label"] = z.label;
      c["cut_pair"] = Json::array({z.cut[0].to_string(), z.cut[1].to_string()});
      c["generic_point"] = point_json(z.certificate.point);
      c["second_point"] = z.second_certificate ? point_json(z.second_certificate->point) : Json(nullptr);
      c["degree"] = z.degree;
      c["degree_verified"] = z.degree_verified;
      Json in = Json::array();
      for (auto k : z.containing) in.push_back(fol.labels[k]);
      c["contained_in"] = std::move(in);
      json_["components"].push_back(std::move(c));
    }
  }

  void indices(const IndexReport& report) {
    for (const auto& v : report.values) {
      Json e;
      e["kind"] = index_kind_name(v.kind);
      e["component"] = v.component;
      e["hypersurface"] = v.hypersurface.empty() ? Json(nullptr) : Json(v.hypersurface);
      e["method"] = index_method_name(v.method);
      e["value"] = rational_json(v.value);
      e["contained"] = v.contained;
      if (v.gauge) e["gauge"] = rational_json(*v.gauge);
      if (v.jacobian) {
        const auto& j = *v.jacobian;
        e["jacobian"] = Json::array({Json::array({rational_json(j[0]), rational_json(j[1])}),
                                    Json::array({rational_json(j[2]), rational_json(j[3])})});
      }
      e["certificates"] = v.certificates;
      json_["indices"].push_back(std::move(e));
    }
    for (const auto& a : report.agreement) {
      json_["agreement"].push_back({{"check", a.check},
                                    {"component", a.component},
                                    {"hypersurface", a.hypersurface.empty() ? Json(nullptr) : Json(a.hypersurface)},
                                    {"agree", a.agree},
                                    {"detail", a.detail}});
      if (!a.agree) failed_ = true;
    }
    for (const auto& c : report.certificates) {
      Json facts = Json::object();
      for (const auto& [k, val] : c.facts) {
        if (facts.contains(k)) {
          if (!facts[k].is_array()) facts[k] = Json::array({facts[k]});
          facts[k].push_back(val);
        } else {
          facts[k] = val;
        }
      }
      json_["certificates"].push_back({{"id", c.id}, {"kind", c.kind}, {"facts", std::move(facts)}});
    }
    for (const auto& w : report.warnings) json_["warnings"].push_back(w);
  }

  void global(const std::vector<GlobalCheckResult>& checks) {
    for (const auto& r : checks) {
      Json terms = Json::array();
      for (const auto& t : r.breakdown) {
        terms.push_back({{"component", t.component}, {"index", rational_json(t.index)}, {"degree", t.degree}});
      }
      json_["global_checks"].push_back({{"theorem", r.theorem},
                                        {"hypersurface", r.hypersurface.empty() ? Json(nullptr) : Json(r.hypersurface)},
                                        {"lhs", rational_json(r.lhs)},
                                        {"rhs", rational_json(r.rhs)},
                                        {"pass", r.pass},
                                        {"breakdown", std::move(terms)}});
      if (!r.pass) failed_ = true;
    }
  }

  void warning(const std::string& w) { json_["warnings"].push_back(w); }

  void error(const std::string& code, const std::string& message, int exit_code) {
    json_["error"] = {{"code", code}, {"message", message}};
    json_["exit_code"] = exit_code;
  }

  int finish() {
    if (json_["error"].is_null()) json_["exit_code"] = failed_ ? kExitCheckFailed : kExitOk;
    return json_["exit_code"].get<int>();
  }

  const Json& json() const { return json_; }

 private:
  Json json_;
  bool failed_ = false;
};

// ---------------------------------------------------------------------------

void run_check(const JobFile& job, Report& report) {
  OneForm omega;
  std::vector<Polynomial> hyps;
  std::vector<std::string> labels;
  std::optional<LogarithmicPresentation> log;
  if (const auto* ex = std::get_if<ExplicitPresentation>(&job.presentation)) {
    omega = ex->omega;
    for (std::size_t i = 0; i < ex->saito.size(); ++i) {
      hyps.push_back(ex->saito[i].f);
      labels.push_back(ex->saito[i].label.empty() ? "V" + std::to_string(i + 1) : ex->saito[i].label);
    }
  } else {
    log = std::holds_alternative<LogarithmicPresentation>(job.presentation)
              ? std::get<LogarithmicPresentation>(job.presentation)
              : std::get<FirstIntegralPresentation>(job.presentation).to_logarithmic();
    omega = build_omega(*log);
    hyps = log->factors;
    for (std::size_t i = 0; i < hyps.size(); ++i) labels.push_back("V" + std::to_string(i + 1));
  }

  const ThreeForm defect = integrability_defect(omega);
  report.diagnostic("integrability", defect.is_zero(),
                    defect.is_zero() ? "omega ^ d(omega) = 0" : "NotIntegrable: omega ^ d(omega) = " + defect.to_string());

  if (job.projective) {
    try {
      const ProjectiveJob pj = validate_projective(homogeneous_presentation(job), chart_index(job));
      report.diagnostic("euler_condition", true, "sum of weight * degree = 0; foliation degree " +
                                                     std::to_string(pj.foliation_degree));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EulerConditionFailed && e.code() != ErrorCode::NotHomogeneous) throw;
      report.diagnostic(e.code() == ErrorCode::NotHomogeneous ? "homogeneity" : "euler_condition", false, e.what());
    }
  }

  for (std::size_t j = 0; j < hyps.size(); ++j) {
    const bool inv = is_invariant_hypersurface(omega, hyps[j]);
    report.diagnostic("invariance(" + labels[j] + ")", inv,
                      "{" + hyps[j].to_string() + " = 0} is " + (inv ? "" : "not ") + "invariant");
  }

  if (log) {
    std::vector<Rational> gauges{log->gauge};
    for (int t : kGaugeProbe) {
      if (std::find(gauges.begin(), gauges.end(), Rational(t)) == gauges.end()) gauges.emplace_back(t);
    }
    for (const auto& t : gauges) {
      try {
        cofactor(*log, t);
        report.diagnostic("cofactor(t=" + to_string(t) + ")", true, "d(omega) = gamma0 ^ omega");
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CofactorIdentityFailed) throw;
        report.diagnostic("cofactor(t=" + to_string(t) + ")", false, e.what());
      }
    }
    report.cofactor_block(*log, labels);
  } else {
    const auto& ex = std::get<ExplicitPresentation>(job.presentation);
    std::vector<std::vector<Rational>> points;
    if (job.components) {
      for (const auto& c : *job.components) {
        if (c.point) points.push_back(*c.point);
      }
    }
    for (std::size_t i = 0; i < ex.saito.size(); ++i) {
      SaitoDecomposition s = ex.saito[i];
      if (s.label.empty()) s.label = labels[i];
      try {
        const auto seed = RandomStream(job.options.seed).split("saito/" + s.label).seed();
        const auto cert = verify_saito(s, omega, seed, job.options.max_attempts, points);
        report.diagnostic("saito(" + s.label + ")", true, "identity exact; h, g nonvanishing on V (" + cert.method + ")");
      } catch (const Error& e) {
        if (e.code() == ErrorCode::UserPointRequired) {
          report.warning(e.what());
        } else if (e.code() == ErrorCode::SaitoIdentityFailed || e.code() == ErrorCode::SaitoCoprimalityFailed) {
          report.diagnostic("saito(" + s.label + ")", false, e.what());
        } else {
          throw;
        }
      }
    }
  }

  if (!defect.is_zero() || job.projective) return;
  if (!log && !job.components) return;
  const Foliation fol = make_foliation(job.presentation);
  try {
    const ComponentSet set = enumerate_components(fol, job.components, enumeration_options(job.options));
    report.components(fol, set);
    for (const auto& w : set.warnings) report.warning(w);
    report.diagnostic("components", true, std::to_string(set.components.size()) + " singular component(s) certified");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ComponentNotSingular) throw;
    report.diagnostic("components", false, e.what());
  }
}

IndexReport run_indices(const JobFile& job, Report& report, const std::optional<FaultInjection>& fault,
                        bool with_global) {
  if (job.projective) {
    if (job.components) throw Error(ErrorCode::InvalidInput, "projective jobs use automatic components");
    const ProjectiveJob pj = validate_projective(homogeneous_presentation(job), chart_index(job));
    const ProjectiveTable table = compute_projective_table(pj, ProjectiveOptions{job.options, fault});
    report.cofactor_block(pj.affine, table.foliation.labels);
    report.components(table.foliation, table.components);
    report.indices(table.report);
    if (with_global) report.global(global_checks(table));
    return table.report;
  }
  if (with_global) throw Error(ErrorCode::InvalidInput, "global checks need a projective job");
  const Foliation fol = make_foliation(job.presentation);
  if (fol.logarithmic) report.cofactor_block(*fol.logarithmic, fol.labels);
  const ComponentSet set = enumerate_components(fol, job.components, enumeration_options(job.options));
  report.components(fol, set);
  IndexReport out = compute_indices(fol, set, job.options);
  report.indices(out);
  return out;
}

void run_worked_example(const JobFile& job, Report& report) {
  const IndexReport r = run_indices(job, report, std::nullopt, false);
  auto value = [&](IndexKind kind, const char* v, std::optional<IndexMethod> m) {
    const auto x = r.find(kind, "Z", v ? v : "", m);
    return x ? to_string(*x) : std::string("missing");
  };
  report.assertion("Var(V3, Z) residue", "1/4", value(IndexKind::Var, "V3", IndexMethod::Residue));
  report.assertion("Var(V3, Z) closed form", "1/4", value(IndexKind::Var, "V3", IndexMethod::ClosedForm));
  report.assertion("Var(V2, Z) residue", "-1/3", value(IndexKind::Var, "V2", IndexMethod::Residue));
  report.assertion("Var(V2, Z) closed form", "-1/3", value(IndexKind::Var, "V2", IndexMethod::ClosedForm));
  const auto& p = std::get<LogarithmicPresentation>(job.presentation);
  const CofactorForm c = cofactor(p, Rational(1));
  const char* expected_res[] = {"-1", "-2", "-3"};
  for (std::size_t j = 0; j < 3; ++j) {
    report.assertion("Res(gamma0, V" + std::to_string(j + 1) + ") at t = 1", expected_res[j],
                     to_string(c.gamma0.residue_along(p.factors[j])));
  }
  report.assertion("BB(Z) liouville", "-1/12", value(IndexKind::BB, nullptr, IndexMethod::Liouville));
  report.assertion("BB(Z) jacobian", "-1/12", value(IndexKind::BB, nullptr, IndexMethod::Jacobian));
  std::string jx = "missing";
  for (const auto& v : r.values) {
    if (v.method == IndexMethod::Jacobian && v.jacobian) {
      const auto& m = *v.jacobian;
      jx = "[[" + to_string(m[0]) + ", " + to_string(m[1]) + "], [" + to_string(m[2]) + ", " + to_string(m[3]) + "]]";
    }
  }
  report.assertion("JX on the plane x = 1", "[[4, 0], [0, -3]]", jx);
}

// ---------------------------------------------------------------------------

std::string render_table(const Json& j) {
  std::ostringstream os;
  os << "command: " << j["command"].get<std::string>() << "    exit code: " << j["exit_code"].get<int>() << "\n";
  const Json& opts = j["input"]["options"];
  os << "seed " << opts["seed"].get<std::uint64_t>() << ", truncation " << opts["truncation"].get<int>() << "\n";
  auto str = [](const Json& x) { return x.is_null() ? std::string("-") : x.get<std::string>(); };

  if (!j["diagnostics"].empty()) {
    os << "\ndiagnostics\n";
    for (const auto& d : j["diagnostics"]) {
      os << "  " << (d["pass"].get<bool>() ? "ok    " : "FAIL  ") << std::left << std::setw(22)
         << d["name"].get<std::string>() << d["detail"].get<std::string>() << "\n";
    }
  }
  if (!j["cofactor"].is_null()) {
    os << "\ncofactor gamma0 at t = " << j["cofactor"]["gauge"].get<std::string>() << ":";
    for (const auto& r : j["cofactor"]["residues"]) {
      os << "  Res(" << r["hypersurface"].get<std::string>() << ") = " << r["residue"].get<std::string>();
    }
    os << "\n";
  }
  if (!j["components"].empty()) {
    os << "\ncomponents\n";
    for (const auto& c : j["components"]) {
      std::vector<std::string> pt, in;
      for (const auto& x : c["generic_point"]) pt.push_back(x.get<std::string>());
      for (const auto& x : c["contained_in"]) in.push_back(x.get<std::string>());
      os << "  " << std::left << std::setw(8) << c["label"].get<std::string>() << "{"
         << c["cut_pair"][0].get<std::string>() << " = " << c["cut_pair"][1].get<std::string>() << " = 0}  point ("
         << join(pt, ", ") << ")  degree " << c["degree"].get<int>() << "  in " << join(in, ",") << "\n";
    }
  }
  if (!j["indices"].empty()) {
    os << "\n  " << std::left << std::setw(10) << "component" << std::setw(8) << "V" << std::setw(6) << "index"
       << std::setw(16) << "method" << "value\n";
    for (const auto& v : j["indices"]) {
      os << "  " << std::left << std::setw(10) << v["component"].get<std::string>() << std::setw(8)
         << str(v["hypersurface"]) << std::setw(6) << v["kind"].get<std::string>() << std::setw(16)
         << v["method"].get<std::string>() << v["value"].get<std::string>();
      if (v.contains("gauge")) os << "  (t = " << v["gauge"].get<std::string>() << ")";
      if (v.contains("jacobian")) {
        const auto& m = v["jacobian"];
        os << "  JX = [[" << m[0][0].get<std::string>() << ", " << m[0][1].get<std::string>() << "], ["
           << m[1][0].get<std::string>() << ", " << m[1][1].get<std::string>() << "]]";
      }
      os << "\n";
    }
  }
  if (!j["global_checks"].empty()) {
    os << "\n  " << std::left << std::setw(18) << "global check" << std::setw(8) << "V" << std::setw(10) << "lhs"
       << std::setw(10) << "rhs" << "result\n";
    for (const auto& g : j["global_checks"]) {
      os << "  " << std::left << std::setw(18) << g["theorem"].get<std::string>() << std::setw(8)
         << str(g["hypersurface"]) << std::setw(10) << g["lhs"].get<std::string>() << std::setw(10)
         << g["rhs"].get<std::string>() << (g["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    }
  }
  if (!j["agreement"].empty()) {
    std::size_t agree = 0;
    for (const auto& a : j["agreement"]) agree += a["agree"].get<bool>() ? 1 : 0;
    os << "\nmethod agreement: " << agree << "/" << j["agreement"].size() << "\n";
    for (const auto& a : j["agreement"]) {
      if (!a["agree"].get<bool>()) {
        os << "  DISAGREE " << a["check"].get<std::string>() << " at " << a["component"].get<std::string>() << ": "
           << a["detail"].get<std::string>() << "\n";
      }
    }
  }
  if (!j["assertions"].empty()) {
    os << "\nassertions\n";
    for (const auto& a : j["assertions"]) {
      os << "  " << (a["pass"].get<bool>() ? "ok    " : "FAIL  ") << std::left << std::setw(30)
         << a["name"].get<std::string>() << a["actual"].get<std::string>() << "\n";
    }
  }
  if (!j["warnings"].empty()) {
    os << "\nwarnings\n";
    for (const auto& w : j["warnings"]) os << "  " << w.get<std::string>() << "\n";
  }
  if (!j["error"].is_null()) {
    os << "\nerror: " << j["error"]["message"].get<std::string>() << "\n";
  }
  return os.str();
}

CommandResult finish(Report& report) {
  CommandResult out;
  out.exit_code = report.finish();
  out.report = report.json().dump(2) + "\n";
  out.table = render_table(report.json());
  return out;
}

}  // namespace

Command parse_command(std::string_view name) {
  if (name == "check") return Command::Check;
  if (name == "indices") return Command::Indices;
  if (name == "global") return Command::Global;
  if (name == "paper-example") return Command::WorkedExample;
  throw Error(ErrorCode::InvalidInput, "unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command command) noexcept {
  switch (command) {
    case Command::Check: return "check";
    case Command::Indices: return "indices";
    case Command::Global: return "global";
    case Command::WorkedExample: return "paper-example";
  }
  return "?";
}

JobFile worked_example_job() {
  JobFile job;
  job.variables = {"x", "y", "z"};
  const auto& v = job.variables;
  job.presentation = LogarithmicPresentation{
      v,
      {parse_polynomial("x", v), parse_polynomial("y", v), parse_polynomial("z", v)},
      {Rational(2), Rational(3), Rational(4)},
      Rational(1)};
  DeclaredComponent z;
  z.label = "Z";
  z.cut = {parse_polynomial("y", v), parse_polynomial("z", v)};
  z.point = std::vector<Rational>{Rational(1), Rational(0), Rational(0)};
  z.degree = 1;
  job.components = std::vector<DeclaredComponent>{z};
  return job;
}

CommandResult run_command(Command command, const std::optional<JobFile>& given) {
  JobFile job;
  if (command == Command::WorkedExample) {
    job = worked_example_job();
    if (given) job.options = given->options;
  } else if (given) {
    job = *given;
  } else {
    JobFile empty;
    empty.variables = {"x"};
    Report report(command, empty);
    report.error("InvalidInput", "InvalidInput: this command needs --job FILE", kExitInputError);
    return finish(report);
  }
  Report report(command, job);
  try {
    switch (command) {
      case Command::Check:
        run_check(job, report);
        break;
      case Command::Indices:
        run_indices(job, report, std::nullopt, false);
        break;
      case Command::Global:
        run_indices(job, report, job.fault, true);
        break;
      case Command::WorkedExample:
        run_worked_example(job, report);
        break;
    }
  } catch (const Error& e) {
    const int code = is_input_error(e.code())            ? kExitInputError
                     : e.code() == ErrorCode::CheckFailed ? kExitCheckFailed
                                                          : kExitComputationFailure;
    report.error(std::string(error_code_name(e.code())), e.what(), code);
  } catch (const std::exception& e) {
    report.error("InternalError", e.what(), kExitComputationFailure);
  }
  return finish(report);
}

CommandResult run_command_text(Command command, std::string_view job_json) {
  try {
    return run_command(command, parse_job(job_json));
  } catch (const Error& e) {
    JobFile empty;
    empty.variables = {"x"};
    Report report(command, empty);
    report.error(std::string(error_code_name(e.code())), e.what(),
                 is_input_error(e.code()) ? kExitInputError : kExitComputationFailure);
    return finish(report);
  }
}

}  // namespace folres
