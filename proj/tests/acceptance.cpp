#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "folres/commands.hpp"
#include "folres/error.hpp"
#include "folres/projective.hpp"
#include "support.hpp"

using namespace folres;
using namespace folres::test;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = what;
    }
  }
  void note(const std::string& text) {
    if (outcome_.pass) outcome_.detail = text;
  }
  Outcome outcome() const { return outcome_; }

 private:
  Outcome outcome_;
};

std::string str(const Rational& r) { return to_string(r); }

std::optional<Rational> lookup(const IndexReport& r, IndexKind kind, const std::string& z, const std::string& v,
                               std::optional<IndexMethod> m) {
  return r.find(kind, z, v, m);
}

// ---------------------------------------------------------------------------

void ac1(Criterion& c) {
  const CommandResult r = run_command(Command::WorkedExample, std::nullopt);
  const json j = json::parse(r.report);
  c.expect(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
  std::map<std::string, std::string> got;
  for (const auto& v : j["indices"]) {
    got[v["kind"].get<std::string>() + "/" + (v["hypersurface"].is_null() ? "" : v["hypersurface"].get<std::string>()) +
        "/" + v["method"].get<std::string>()] = v["value"];
  }
  c.expect(got["Var/V3/residue"] == "1/4", "Var(V3) = " + got["Var/V3/residue"]);
  c.expect(got["Var/V2/residue"] == "-1/3", "Var(V2) = " + got["Var/V2/residue"]);
  c.expect(got["BB//liouville"] == "-1/12", "BB = " + got["BB//liouville"]);
  const auto& res = j["cofactor"]["residues"];
  c.expect(j["cofactor"]["gauge"] == "1" && res[0]["residue"] == "-1" && res[1]["residue"] == "-2" &&
               res[2]["residue"] == "-3",
           "cofactor residues " + res.dump());
  c.note("Var = 1/4, -1/3; Res = (-1, -2, -3); BB = -1/12");
}

void ac2(Criterion& c) {
  const CommandResult r = run_command(Command::WorkedExample, std::nullopt);
  const json j = json::parse(r.report);
  bool seen = false;
  for (const auto& v : j["indices"]) {
    if (v["method"] != "jacobian") continue;
    seen = true;
    c.expect(v["jacobian"] == json::parse(R"([["4","0"],["0","-3"]])"), "JX = " + v["jacobian"].dump());
    c.expect(v["value"] == "-1/12", "Tr^2/det = " + v["value"].get<std::string>());
  }
  c.expect(seen, "no jacobian value");
  c.note("JX = diag(4, -3), Tr^2/det = -1/12 on the plane x = 1");
}

LogarithmicPresentation random_log(RandomStream& rng, std::size_t n) {
  std::vector<std::string> vars(xyz);
  if (n == 4) vars.push_back("w");
  const std::size_t k = 2 + static_cast<std::size_t>((rng.small_int(17) + 17) % 3);
  LogarithmicPresentation p{vars, {}, {}, Rational(1)};
  for (std::size_t j = 0; j < k; ++j) {
    Polynomial f(vars);
    do {
      if (rng.small_int(1) == 0) {
        f = Polynomial::variable(vars, static_cast<std::size_t>((rng.small_int(17) + 17) % static_cast<long>(n)));
      } else {
        f = random_linear(rng, vars, true);
      }
    } while (std::find(p.factors.begin(), p.factors.end(), f) != p.factors.end());
    p.factors.push_back(f);
    p.weights.push_back(frac(rng.nonzero_int(7), 1 + (rng.small_int(2) + 2)));
  }
  return p;
}

struct AgreementCounts {
  int presentations = 0, components = 0, var_pairs = 0, jacobian = 0, gauges = 0, off_hypersurface = 0;
};

void check_agreement(Criterion& c, const Foliation& f, const IndexReport& r, AgreementCounts& n) {
  std::map<std::string, bool> comps;
  for (const auto& v : r.values) comps[v.component] = true;
  for (const auto& [z, _] : comps) {
    ++n.components;
    for (const auto& v : f.labels) {
      const auto res = lookup(r, IndexKind::Var, z, v, IndexMethod::Residue);
      const auto closed = lookup(r, IndexKind::Var, z, v, IndexMethod::ClosedForm);
      c.expect(closed.has_value(), z + "/" + v + ": no closed form");
      if (res && closed) {
        ++n.var_pairs;
        c.expect(*res == *closed, z + "/" + v + ": residue " + str(*res) + " vs closed form " + str(*closed));
      }
      for (const auto& e : r.values) {
        if (e.kind == IndexKind::Var && e.component == z && e.hypersurface == v && !e.contained) {
          ++n.off_hypersurface;
          c.expect(e.value == 0, z + "/" + v + ": Var off the hypersurface is " + str(e.value));
        }
      }
    }
    std::optional<Rational> base;
    for (const auto& e : r.values) {
      if (e.component != z || e.kind != IndexKind::BB) continue;
      if (e.method == IndexMethod::Liouville) base = e.value;
    }
    const auto jac = lookup(r, IndexKind::BB, z, "", IndexMethod::Jacobian);
    if (jac && base) {
      ++n.jacobian;
      c.expect(*jac == *base, z + ": jacobian " + str(*jac) + " vs liouville " + str(*base));
    }
  }
  c.expect(r.all_agree(), "an agreement flag is false");
}

void ac3(Criterion& c) {
  RandomStream rng(20240601);
  AgreementCounts n;
  int attempts = 0;
  while (n.presentations < 60 && attempts < 200) {
    ++attempts;
    const auto p = random_log(rng, attempts % 2 == 0 ? 3 : 4);
    IndexOptions o;
    o.seed = static_cast<std::uint64_t>(attempts);
    try {
      const Foliation f = make_foliation(p);
      const auto set = enumerate_components(f, std::nullopt, EnumerationOptions{o.seed, 8, 16, true, false});
      if (set.components.empty()) continue;
      const IndexReport r = compute_indices(f, set, o);
      for (const auto& z : set.components) {
        const auto primary = lookup(r, IndexKind::BB, z.label, "", IndexMethod::Liouville);
        c.expect(primary.has_value(), z.label + ": missing BB");
        for (int t : kGaugeProbe) {
          ++n.gauges;
          const Rational v = bb_liouville(p, z, z.certificate, Rational(t), o.truncation).value;
          c.expect(primary && v == *primary, z.label + ": BB at t = " + std::to_string(t) + " is " + str(v));
        }
      }
      check_agreement(c, f, r, n);
      ++n.presentations;
    } catch (const Error& e) {
      c.expect(false, std::string("presentation ") + std::to_string(attempts) + ": " + e.what());
    }
  }
  c.expect(n.presentations >= 50, "only " + std::to_string(n.presentations) + " presentations");
  c.expect(n.jacobian > 0, "no jacobian comparisons");
  c.note(std::to_string(n.presentations) + " presentations, " + std::to_string(n.components) + " components, " +
         std::to_string(n.var_pairs) + " Var pairs, " + std::to_string(n.gauges) + " gauge probes, " +
         std::to_string(n.jacobian) + " jacobian checks");
}

void ac4(Criterion& c) {
  RandomStream rng(777);
  int count = 0, values = 0, attempts = 0;
  while (count < 55 && attempts < 200) {
    ++attempts;
    const std::size_t n = attempts % 2 == 0 ? 3 : 4;
    const auto lp = random_log(rng, n);
    FirstIntegralPresentation p{lp.variables, lp.factors, {}};
    for (std::size_t j = 0; j < p.factors.size(); ++j) p.multiplicities.push_back(1 + static_cast<unsigned>(rng.small_int(2) + 2));
    try {
      const Foliation f = make_foliation(p);
      const auto set = enumerate_components(f, std::nullopt, EnumerationOptions{static_cast<std::uint64_t>(attempts), 8, 16, true, false});
      if (set.components.empty()) continue;
      IndexOptions o;
      o.seed = static_cast<std::uint64_t>(attempts);
      const IndexReport r = compute_indices(f, set, o);
      for (const auto& z : set.components) {
        const auto fi = lookup(r, IndexKind::BB, z.label, "", IndexMethod::FirstIntegral);
        const auto li = lookup(r, IndexKind::BB, z.label, "", IndexMethod::Liouville);
        c.expect(fi && li, z.label + ": missing BB");
        if (!fi || !li) continue;
        ++values;
        c.expect(*fi <= 0, z.label + ": BB = " + str(*fi) + " > 0");
        c.expect(*fi == *li, z.label + ": first integral " + str(*fi) + " vs liouville " + str(*li));
        // closed form from the multiplicities of the factors containing Z
        Rational expected(0);
        for (std::size_t a = 0; a < z.containing.size(); ++a) {
          for (std::size_t b = a + 1; b < z.containing.size(); ++b) {
            const Rational ma(p.multiplicities[z.containing[a]]), mb(p.multiplicities[z.containing[b]]);
            expected -= (ma - mb) * (ma - mb) / (ma * mb);
          }
        }
        if (z.containing.size() == 2) c.expect(*fi == expected, z.label + ": closed form mismatch");
      }
      c.expect(r.all_agree(), "agreement flag false");
      ++count;
    } catch (const Error& e) {
      c.expect(false, std::string("first integral ") + std::to_string(attempts) + ": " + e.what());
    }
  }
  c.expect(count >= 50, "only " + std::to_string(count) + " presentations");
  c.note(std::to_string(count) + " presentations, " + std::to_string(values) + " BB values, all <= 0");
}

const std::vector<std::string> p3{"x0", "x1", "x2", "x3"};

bool run_global(Criterion& c, const LogarithmicPresentation& p, std::size_t chart,
                const std::function<Rational(const GlobalCheckResult&)>& expected, double& worst) {
  const auto start = std::chrono::steady_clock::now();
  const auto table = compute_projective_table(validate_projective(p, chart), ProjectiveOptions{});
  const auto checks = global_checks(table);
  worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  for (const auto& r : checks) {
    const Rational want = expected(r);
    c.expect(r.pass && r.lhs == want,
             r.theorem + " " + r.hypersurface + ": " + str(r.lhs) + " vs " + str(r.rhs) + ", expected " + str(want));
  }
  return true;
}

void ac5(Criterion& c) {
  RandomStream rng(5151);
  double worst = 0;
  int jobs = 0;
  for (long k = 3; k <= 5; ++k) {
    int done = 0, attempts = 0;
    while (done < 2 && attempts < 50) {
      ++attempts;
      LogarithmicPresentation p{p3, {}, {}, Rational(1)};
      Rational sum(0);
      for (long j = 0; j < k; ++j) {
        Polynomial f = random_linear(rng, p3, false);
        p.factors.push_back(f);
        const Rational w = j + 1 == k ? Rational(-sum) : Rational(rng.nonzero_int(5));
        p.weights.push_back(w);
        sum += w;
      }
      if (p.weights.back() == 0) continue;
      try {
        validate_projective(p, 0);
      } catch (const Error&) {
        continue;
      }
      try {
        run_global(c, p, 0,
                   [k](const GlobalCheckResult& r) {
                     if (r.theorem == "variational_sum") return Rational(k);
                     if (r.theorem == "gsv_sum") return Rational(k - 1);
                     if (r.theorem == "cs_sum") return Rational(1);
                     return Rational(k * k);
                   },
                   worst);
        ++done;
        ++jobs;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidInput || e.code() == ErrorCode::ChartMissesComponent) continue;
        c.expect(false, std::string("k = ") + std::to_string(k) + ": " + e.what());
        break;
      }
    }
    c.expect(done == 2, "k = " + std::to_string(k) + ": " + std::to_string(done) + " jobs");
  }

  // degrees (1, 1, 2), weights (3, 1, -2); d = 2
  LogarithmicPresentation mixed{p3, {P("x1 + x2 + 2*x3", p3), P("x0 + 3*x2 - x3", p3), P("x1*x2 - x0*x3", p3)},
                                pt({3, 1, -2}), Rational(1)};
  const std::map<std::string, Rational> var{{"V1", 4}, {"V2", 4}, {"V3", 8}};
  const std::map<std::string, Rational> gsv{{"V1", 3}, {"V2", 3}, {"V3", 4}};
  const std::map<std::string, Rational> cs{{"V1", 1}, {"V2", 1}, {"V3", 4}};
  try {
    run_global(c, mixed, 0,
               [&](const GlobalCheckResult& r) {
                 if (r.theorem == "variational_sum") return var.at(r.hypersurface);
                 if (r.theorem == "gsv_sum") return gsv.at(r.hypersurface);
                 if (r.theorem == "cs_sum") return cs.at(r.hypersurface);
                 return Rational(16);
               },
               worst);
    ++jobs;
  } catch (const Error& e) {
    c.expect(false, std::string("mixed degree job: ") + e.what());
  }
  c.expect(worst < 30.0, "slowest job took " + std::to_string(worst) + " s");
  std::ostringstream os;
  os << jobs << " jobs (k = 3, 4, 5 and degrees (1, 1, 2)), slowest " << worst << " s";
  c.note(os.str());
}

void ac6(Criterion& c) {
  const CommandResult r = run_command(Command::WorkedExample, std::nullopt);
  const json j = json::parse(r.report);
  bool seen = false;
  for (const auto& v : j["indices"]) {
    if (v["kind"] == "Var" && v["hypersurface"] == "V1") {
      seen = true;
      c.expect(v["value"] == "0" && v["contained"] == false, "Var(V1, Z) = " + v["value"].get<std::string>());
    }
  }
  c.expect(seen, "Var(V1, Z) missing");

  // random presentations: every factor not containing a component contributes exactly 0
  RandomStream rng(63);
  int zeros = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_log(rng, 3);
    const Foliation f = make_foliation(p);
    const auto set = enumerate_components(f, std::nullopt, EnumerationOptions{});
    for (const auto& z : set.components) {
      for (std::size_t jdx = 0; jdx < p.factors.size(); ++jdx) {
        if (z.contained_in(jdx)) continue;
        ++zeros;
        c.expect(var_closed_form(p, jdx, z, z.certificate).value == 0, z.label + ": nonzero Var off V");
      }
    }
  }
  c.note("Var(V1, Z) = 0 in the worked example and " + std::to_string(zeros) + " random off-hypersurface pairs");
}

void ac7(Criterion& c) {
  const char* bad = R"({"variables": ["x", "y", "z"],
    "foliation": {"type": "explicit", "omega": {"x": "z", "y": "x", "z": "y"}, "saito": []}})";
  const CommandResult r = run_command_text(Command::Indices, bad);
  const json j = json::parse(r.report);
  c.expect(r.exit_code == 2, "non-integrable form exit code " + std::to_string(r.exit_code));
  c.expect(j["error"]["code"] == "NotIntegrable", "error " + j["error"].dump());

  const std::string fault = R"({"variables": ["x0","x1","x2","x3"],
    "foliation": {"type": "logarithmic", "factors": ["x0","x1","x2","x0 + x1 + x2 + x3"], "weights": [1,2,-5,2]},
    "projective": {"homogeneous": true, "chart": "x3"},
    "options": {"fault_injection": {"hypersurface": "V2", "component": "Z_2_4"}}})";
  const CommandResult g = run_command_text(Command::Global, fault);
  const json gj = json::parse(g.report);
  c.expect(g.exit_code == 3, "fault-injected exit code " + std::to_string(g.exit_code));
  int failed = 0;
  for (const auto& x : gj["global_checks"]) {
    if (x["pass"] == false) {
      ++failed;
      c.expect(x["theorem"] == "variational_sum" && x["hypersurface"] == "V2", "wrong check failed: " + x.dump());
    }
  }
  c.expect(failed == 1, std::to_string(failed) + " checks failed");
  c.note("NotIntegrable exits 2; fault in Var(V2, Z_2_4) fails only variational_sum(V2) with exit 3");
}

void ac8(Criterion& c) {
  const std::vector<std::pair<Command, std::string>> jobs{
      {Command::WorkedExample, ""},
      {Command::Indices, R"({"variables": ["x","y","z","w"],
        "foliation": {"type": "logarithmic", "factors": ["x + 2*y - w","z - y + 1","x - 3*z + w","y"],
                      "weights": ["1/2", -3, 5, 2]}, "options": {"seed": 99}})"},
      {Command::Indices, R"({"variables": ["x","y","z"],
        "foliation": {"type": "first_integral", "factors": ["x + y - 1","z - x*y","y + 2*z"], "multiplicities": [1,3,2]}})"},
      {Command::Global, R"({"variables": ["x0","x1","x2","x3"],
        "foliation": {"type": "logarithmic", "factors": ["x1 + x2 + 2*x3","x0 + 3*x2 - x3","x1*x2 - x0*x3"], "weights": [3,1,-2]},
        "projective": {"homogeneous": true, "chart": "x0"}, "options": {"seed": 12345}})"}};
  for (const auto& [cmd, text] : jobs) {
    const auto run = [&] { return text.empty() ? run_command(cmd, std::nullopt) : run_command_text(cmd, text); };
    const CommandResult a = run(), b = run();
    c.expect(a.report == b.report, std::string(command_name(cmd)) + ": reports differ");
    c.expect(a.exit_code == 0, std::string(command_name(cmd)) + ": exit code " + std::to_string(a.exit_code));
  }
  c.note(std::to_string(jobs.size()) + " jobs byte-identical across two runs");
}

}  // namespace

int main() {
  const std::vector<std::tuple<const char*, const char*, double, void (*)(Criterion&)>> criteria{
      {"AC1", "worked example", 1.0, ac1},
      {"AC2", "jacobian cross-check", 1.0, ac2},
      {"AC3", "method agreement", 60.0, ac3},
      {"AC4", "sign theorem", 0.0, ac4},
      {"AC5", "global sums on P3", 0.0, ac5},
      {"AC6", "off-hypersurface Var", 0.0, ac6},
      {"AC7", "negative controls", 0.0, ac7},
      {"AC8", "determinism", 0.0, ac8},
  };
  int failures = 0;
  for (const auto& [id, name, limit, fn] : criteria) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0) c.expect(secs < limit, "took " + std::to_string(secs) + " s");
    const Outcome o = c.outcome();
    if (!o.pass) ++failures;
    std::printf("%s %s  %-22s %7.3fs  %s\n", id, o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
