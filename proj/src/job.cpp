#include "folres/job.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "folres/error.hpp"
#include "folres/parser.hpp"
#include "json_internal.hpp"

namespace folres {

namespace {

using detail::Json;

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, path + ": " + what);
}

void allow_keys(const Json& obj, const std::string& path, std::initializer_list<std::string_view> keys) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) invalid(path, "unknown field '" + key + "'");
  }
}

const Json& require(const Json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) invalid(path, std::string("missing field '") + key + "'");
  return *it;
}

const Json& require_array(const Json& obj, const std::string& path, const char* key) {
  const Json& v = require(obj, path, key);
  if (!v.is_array()) invalid(path + "." + key, "expected an array");
  return v;
}

Polynomial poly_at(const Json& v, const std::string& path, const std::vector<std::string>& vars) {
  if (!v.is_string()) invalid(path, "expected a polynomial string");
  try {
    return parse_polynomial(v.get<std::string>(), vars);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

Rational rational_at(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what());
    }
  }
  invalid(path, "expected an exact rational (integer or \"p/q\" string)");
}

long long integer_at(const Json& v, const std::string& path, long long lo, long long hi) {
  if (!v.is_number_integer()) invalid(path, "expected an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > hi) invalid(path, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x;
}

std::vector<Polynomial> polys_at(const Json& obj, const std::string& path, const char* key,
                                 const std::vector<std::string>& vars) {
  const Json& arr = require_array(obj, path, key);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(poly_at(arr[i], path + "." + key + "[" + std::to_string(i) + "]", vars));
  }
  return out;
}

OneForm form_at(const Json& v, const std::string& path, const std::vector<std::string>& vars) {
  if (!v.is_object()) invalid(path, "expected an object mapping variables to coefficients");
  OneForm form(vars);
  for (const auto& [key, value] : v.items()) {
    std::size_t index = vars.size();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == key) index = i;
    }
    if (index == vars.size()) throw Error(ErrorCode::UnknownVariable, path + ": '" + key + "' is not declared");
    form.set(index, poly_at(value, path + "." + key, vars));
  }
  return form;
}

Presentation presentation_at(const Json& v, const std::vector<std::string>& vars) {
  const std::string path = "foliation";
  if (!v.is_object()) invalid(path, "expected an object");
  const Json& type = require(v, path, "type");
  if (!type.is_string()) invalid(path + ".type", "expected a string");
  const auto t = type.get<std::string>();
  if (t == "logarithmic") {
    allow_keys(v, path, {"type", "factors", "weights", "gauge_t"});
    LogarithmicPresentation p{vars, polys_at(v, path, "factors", vars), {}, Rational(1)};
    const Json& w = require_array(v, path, "weights");
    for (std::size_t i = 0; i < w.size(); ++i) p.weights.push_back(rational_at(w[i], path + ".weights[" + std::to_string(i) + "]"));
    if (v.contains("gauge_t")) p.gauge = rational_at(v["gauge_t"], path + ".gauge_t");
    return p;
  }
  if (t == "first_integral") {
    allow_keys(v, path, {"type", "factors", "multiplicities"});
    FirstIntegralPresentation p{vars, polys_at(v, path, "factors", vars), {}};
    const Json& m = require_array(v, path, "multiplicities");
    for (std::size_t i = 0; i < m.size(); ++i) {
      p.multiplicities.push_back(
          static_cast<unsigned>(integer_at(m[i], path + ".multiplicities[" + std::to_string(i) + "]", 1, 1000000)));
    }
    return p;
  }
  if (t == "explicit") {
    allow_keys(v, path, {"type", "omega", "saito"});
    ExplicitPresentation p{form_at(require(v, path, "omega"), path + ".omega", vars), {}};
    const Json& saito = require_array(v, path, "saito");
    for (std::size_t i = 0; i < saito.size(); ++i) {
      const std::string sp = path + ".saito[" + std::to_string(i) + "]";
      const Json& s = saito[i];
      if (!s.is_object()) invalid(sp, "expected an object");
      allow_keys(s, sp, {"label", "g", "h", "f", "eta"});
      SaitoDecomposition d;
      if (s.contains("label")) {
        if (!s["label"].is_string()) invalid(sp + ".label", "expected a string");
        d.label = s["label"].get<std::string>();
      }
      d.g = s.contains("g") ? poly_at(s["g"], sp + ".g", vars) : Polynomial::constant(vars, Rational(1));
      d.h = poly_at(require(s, sp, "h"), sp + ".h", vars);
      d.f = poly_at(require(s, sp, "f"), sp + ".f", vars);
      d.eta = form_at(require(s, sp, "eta"), sp + ".eta", vars);
      p.saito.push_back(std::move(d));
    }
    return p;
  }
  invalid(path + ".type", "expected logarithmic, first_integral or explicit, got '" + t + "'");
}

std::vector<DeclaredComponent> components_at(const Json& v, const std::vector<std::string>& vars) {
  std::vector<DeclaredComponent> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string path = "components[" + std::to_string(i) + "]";
    const Json& c = v[i];
    if (!c.is_object()) invalid(path, "expected an object");
    allow_keys(c, path, {"label", "cut_pair", "generic_point", "degree"});
    DeclaredComponent d;
    if (c.contains("label")) {
      if (!c["label"].is_string()) invalid(path + ".label", "expected a string");
      d.label = c["label"].get<std::string>();
    }
    const auto cut = polys_at(c, path, "cut_pair", vars);
    if (cut.size() != 2) invalid(path + ".cut_pair", "expected exactly two polynomials");
    d.cut = {cut[0], cut[1]};
    if (c.contains("generic_point")) {
      const Json& pt = c["generic_point"];
      if (!pt.is_array() || pt.size() != vars.size()) {
        invalid(path + ".generic_point", "expected " + std::to_string(vars.size()) + " coordinates");
      }
      std::vector<Rational> point;
      for (std::size_t k = 0; k < pt.size(); ++k) {
        point.push_back(rational_at(pt[k], path + ".generic_point[" + std::to_string(k) + "]"));
      }
      d.point = std::move(point);
    }
    if (c.contains("degree")) d.degree = static_cast<int>(integer_at(c["degree"], path + ".degree", 1, 1000000));
    out.push_back(std::move(d));
  }
  return out;
}

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Json poly_json(const Polynomial& p) { return p.to_string(); }

Json form_json(const OneForm& form) {
  Json out = Json::object();
  for (std::size_t i = 0; i < form.dimension(); ++i) {
    if (!form[i].is_zero()) out[form.variables()[i]] = poly_json(form[i]);
  }
  return out;
}

}  // namespace

namespace detail {

Json rational_json(const Rational& value) { return to_string(value); }

Json job_to_json(const JobFile& job) {
  Json out;
  out["variables"] = job.variables;
  Json fol;
  if (const auto* p = std::get_if<LogarithmicPresentation>(&job.presentation)) {
    fol["type"] = "logarithmic";
    fol["factors"] = Json::array();
    for (const auto& f : p->factors) fol["factors"].push_back(poly_json(f));
    fol["weights"] = Json::array();
    for (const auto& w : p->weights) fol["weights"].push_back(rational_json(w));
    fol["gauge_t"] = rational_json(p->gauge);
  } else if (const auto* q = std::get_if<FirstIntegralPresentation>(&job.presentation)) {
    fol["type"] = "first_integral";
    fol["factors"] = Json::array();
    for (const auto& f : q->factors) fol["factors"].push_back(poly_json(f));
    fol["multiplicities"] = q->multiplicities;
  } else {
    const auto& e = std::get<ExplicitPresentation>(job.presentation);
    fol["type"] = "explicit";
    fol["omega"] = form_json(e.omega);
    fol["saito"] = Json::array();
    for (const auto& s : e.saito) {
      Json sj;
      if (!s.label.empty()) sj["label"] = s.label;
      sj["g"] = poly_json(s.g);
      sj["h"] = poly_json(s.h);
      sj["f"] = poly_json(s.f);
      sj["eta"] = form_json(s.eta);
      fol["saito"].push_back(std::move(sj));
    }
  }
  out["foliation"] = std::move(fol);
  if (!job.components) {
    out["components"] = "auto";
  } else {
    out["components"] = Json::array();
    for (const auto& c : *job.components) {
      Json cj;
      if (!c.label.empty()) cj["label"] = c.label;
      cj["cut_pair"] = {poly_json(c.cut[0]), poly_json(c.cut[1])};
      if (c.point) {
        cj["generic_point"] = Json::array();
        for (const auto& x : *c.point) cj["generic_point"].push_back(rational_json(x));
      }
      if (c.degree) cj["degree"] = *c.degree;
      out["components"].push_back(std::move(cj));
    }
  }
  if (job.projective) out["projective"] = {{"homogeneous", true}, {"chart", job.projective->chart}};
  Json opts;
  opts["truncation"] = job.options.truncation;
  opts["seed"] = job.options.seed;
  opts["max_attempts"] = job.options.max_attempts;
  opts["double_check_points"] = job.options.double_check_points;
  if (job.fault) {
    opts["fault_injection"] = {{"hypersurface", job.fault->hypersurface},
                               {"component", job.fault->component},
                               {"delta", rational_json(job.fault->delta)}};
  }
  out["options"] = std::move(opts);
  return out;
}

}  // namespace detail

JobFile parse_job(std::string_view json_text) {
  Json root;
  try {
    root = Json::parse(json_text.begin(), json_text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::string what = e.what();
    const auto colon = what.rfind(": ");
    throw Error(ErrorCode::SyntaxError, "job JSON at " + position_of(json_text, e.byte) + ": " +
                                            (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
  if (!root.is_object()) invalid("job", "expected a JSON object");
  allow_keys(root, "job", {"variables", "foliation", "components", "projective", "options"});

  JobFile job;
  const Json& vars = require_array(root, "job", "variables");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string path = "variables[" + std::to_string(i) + "]";
    if (!vars[i].is_string()) invalid(path, "expected a string");
    const auto name = vars[i].get<std::string>();
    bool ident = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
    for (char c : name) ident = ident && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ident) invalid(path, "'" + name + "' is not an identifier");
    if (!seen.insert(name).second) invalid(path, "duplicate variable '" + name + "'");
    job.variables.push_back(name);
  }
  if (job.variables.empty()) invalid("variables", "at least one variable is required");

  job.presentation = presentation_at(require(root, "job", "foliation"), job.variables);

  if (root.contains("components")) {
    const Json& c = root["components"];
    if (c.is_string()) {
      if (c.get<std::string>() != "auto") invalid("components", "expected \"auto\" or a list");
    } else if (c.is_array()) {
      job.components = components_at(c, job.variables);
    } else {
      invalid("components", "expected \"auto\" or a list");
    }
  }

  if (root.contains("projective")) {
    const Json& p = root["projective"];
    if (!p.is_object()) invalid("projective", "expected an object");
    allow_keys(p, "projective", {"homogeneous", "chart"});
    if (p.contains("homogeneous") && !(p["homogeneous"].is_boolean() && p["homogeneous"].get<bool>())) {
      invalid("projective.homogeneous", "must be true");
    }
    ProjectiveSettings settings{job.variables.front()};
    if (p.contains("chart")) {
      const Json& ch = p["chart"];
      if (ch.is_number_integer()) {
        const auto idx = integer_at(ch, "projective.chart", 0, static_cast<long long>(job.variables.size()) - 1);
        settings.chart = job.variables[static_cast<std::size_t>(idx)];
      } else if (ch.is_string() && seen.count(ch.get<std::string>())) {
        settings.chart = ch.get<std::string>();
      } else {
        invalid("projective.chart", "expected a declared variable name or index");
      }
    }
    job.projective = settings;
  }

  if (root.contains("options")) {
    const Json& o = root["options"];
    if (!o.is_object()) invalid("options", "expected an object");
    allow_keys(o, "options", {"truncation", "seed", "max_attempts", "double_check_points", "fault_injection"});
    if (o.contains("truncation")) {
      job.options.truncation = static_cast<int>(integer_at(o["truncation"], "options.truncation", 1, kMaxTruncation));
    }
    if (o.contains("seed")) {
      if (!o["seed"].is_number_unsigned() && !(o["seed"].is_number_integer() && o["seed"].get<long long>() >= 0)) {
        invalid("options.seed", "expected a nonnegative integer");
      }
      job.options.seed = o["seed"].get<std::uint64_t>();
    }
    if (o.contains("max_attempts")) {
      job.options.max_attempts = static_cast<int>(integer_at(o["max_attempts"], "options.max_attempts", 1, 10000));
    }
    if (o.contains("double_check_points")) {
      if (!o["double_check_points"].is_boolean()) invalid("options.double_check_points", "expected a boolean");
      job.options.double_check_points = o["double_check_points"].get<bool>();
    }
    if (o.contains("fault_injection")) {
      const Json& f = o["fault_injection"];
      const std::string path = "options.fault_injection";
      if (!f.is_object()) invalid(path, "expected an object");
      allow_keys(f, path, {"hypersurface", "component", "delta"});
      const Json& hyp = require(f, path, "hypersurface");
      const Json& comp = require(f, path, "component");
      if (!hyp.is_string() || !comp.is_string()) invalid(path, "hypersurface and component must be labels");
      job.fault = FaultInjection{hyp.get<std::string>(), comp.get<std::string>(),
                                 f.contains("delta") ? rational_at(f["delta"], path + ".delta") : Rational(1)};
    }
  }
  return job;
}

JobFile load_job(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read job file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_job(buffer.str());
}

std::string serialize_job(const JobFile& job) { return detail::job_to_json(job).dump(2); }

LogarithmicPresentation homogeneous_presentation(const JobFile& job) {
  if (const auto* p = std::get_if<LogarithmicPresentation>(&job.presentation)) return *p;
  if (const auto* q = std::get_if<FirstIntegralPresentation>(&job.presentation)) return q->to_logarithmic();
  throw Error(ErrorCode::InvalidInput, "projective jobs need a logarithmic or first-integral foliation");
}

}  // namespace folres
