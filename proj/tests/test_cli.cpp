#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "folres/commands.hpp"
#include "folres/error.hpp"
#include "support.hpp"

using namespace folres;
using namespace folres::test;
using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string job_path(const std::string& name) { return std::string(FOLRES_JOBS_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(FOLRES_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool has_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured()) {
    for (const auto& x : j) {
      if (has_float(x)) return true;
    }
  }
  return false;
}

const char* kNotIntegrable = R"({"variables": ["x", "y", "z"],
  "foliation": {"type": "explicit", "omega": {"x": "z", "y": "x", "z": "y"}, "saito": []}})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("polynomial parser") {
  CHECK(parse_polynomial("2*y*z", xyz) == Polynomial::monomial(xyz, {0, 1, 1}, Rational(2)));
  CHECK(parse_polynomial("x^2*y^3*z^4", xyz).total_degree() == 9);
  CHECK(parse_polynomial(" 3/4 * ( x - y )^2 ", xyz) == P("3/4*x^2 - 3/2*x*y + 3/4*y^2"));
  CHECK(parse_polynomial("-x + -(-y)", xyz) == P("y - x"));
  try {
    parse_polynomial("2x", xyz);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(std::string(e.what()).find("column 2") != std::string::npos);
  }
  try {
    parse_polynomial("x + w", xyz);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVariable);
  }
  CHECK_THROWS_AS(parse_polynomial("x^-1", xyz), Error);
  CHECK_THROWS_AS(parse_polynomial("(x + y", xyz), Error);
  CHECK_THROWS_AS(parse_polynomial("x / y", xyz), Error);
  CHECK_THROWS_AS(parse_polynomial("", xyz), Error);
}

TEST_CASE("job parsing errors carry positions") {
  try {
    parse_job("{\n  \"variables\": [\"x\",\n}");
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_job(R"({"variables": ["x","y","z"], "foliation": {"type": "logarithmic", "factors": ["2x"], "weights": [1]}})");
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(std::string(e.what()).find("foliation.factors[0]") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_job(R"({"variables": ["x"], "foliation": {"type": "logarithmic", "factors": ["x"],
                                 "weights": [1]}, "extra": 1})"),
                  Error);
}

TEST_CASE("serialization round trip on the fixture jobs") {
  for (const auto& entry : std::filesystem::directory_iterator(FOLRES_JOBS_DIR)) {
    CAPTURE(entry.path().string());
    const std::string once = serialize_job(parse_job(read_file(entry.path())));
    CHECK(serialize_job(parse_job(once)) == once);
  }
  const std::string p = serialize_job(worked_example_job());
  CHECK(serialize_job(parse_job(p)) == p);
}

TEST_CASE("worked example through the library") {
  const CommandResult r = run_command(Command::WorkedExample, std::nullopt);
  CHECK(r.exit_code == kExitOk);
  const json j = json::parse(r.report);
  int bb = 0;
  for (const auto& v : j["indices"]) {
    if (v["kind"] == "BB") {
      CHECK(v["value"] == "-1/12");
      ++bb;
    }
  }
  CHECK(bb == 2);
  for (const auto& a : j["assertions"]) CHECK(a["pass"] == true);
  CHECK_FALSE(has_float(j));
  for (const char* key : {"input", "components", "indices", "global_checks", "certificates", "warnings"}) {
    CHECK(j.contains(key));
  }
}

TEST_CASE("exit codes") {
  CHECK(run_command_text(Command::Indices, kNotIntegrable).exit_code == kExitComputationFailure);
  CHECK(json::parse(run_command_text(Command::Indices, kNotIntegrable).report)["error"]["code"] == "NotIntegrable");
  CHECK(run_command_text(Command::Check, kNotIntegrable).exit_code == kExitCheckFailed);
  CHECK(run_command_text(Command::Indices, "{").exit_code == kExitInputError);
  CHECK(run_command(Command::Indices, std::nullopt).exit_code == kExitInputError);
  CHECK(run_command(Command::Global, worked_example_job()).exit_code == kExitInputError);
  CHECK(run_command(Command::Check, worked_example_job()).exit_code == kExitOk);

  const std::string euler = R"({"variables": ["x0","x1","x2","x3"],
    "foliation": {"type": "logarithmic", "factors": ["x0","x1","x2"], "weights": [2,3,4]},
    "projective": {"homogeneous": true, "chart": "x3"}})";
  CHECK(run_command_text(Command::Global, euler).exit_code == kExitInputError);
  CHECK(run_command_text(Command::Check, euler).exit_code == kExitCheckFailed);
}

TEST_CASE("global command on the three-plane arrangement") {
  const std::string job = R"({"variables": ["x0","x1","x2","x3"],
    "foliation": {"type": "logarithmic", "factors": ["x0 + x3","x1 - x3","x2 + 2*x3"], "weights": [1,1,-2]},
    "projective": {"homogeneous": true, "chart": "x3"}})";
  const CommandResult r = run_command_text(Command::Global, job);
  CHECK(r.exit_code == kExitOk);
  const json j = json::parse(r.report);
  bool seen = false;
  for (const auto& g : j["global_checks"]) {
    if (g["theorem"] == "bb_sum") {
      CHECK(g["lhs"] == "9");
      CHECK(g["rhs"] == "9");
      seen = true;
    }
  }
  CHECK(seen);
  CHECK(run_command_text(Command::Global, job).report == r.report);
}

TEST_CASE("command line front end") {
  const Run worked = cli("paper-example");
  CHECK(worked.code == 0);
  CHECK(json::parse(worked.out)["exit_code"] == 0);
  CHECK(cli("paper-example --format table").out.find("-1/12") != std::string::npos);

  const Run global = cli("global --job " + job_path("p3_four_planes.json"));
  CHECK(global.code == 0);
  CHECK(cli("global --job " + job_path("p3_four_planes.json")).out == global.out);
  CHECK(cli("global --job " + job_path("p3_four_planes.json") + " --seed 3").code == 0);
  CHECK(cli("global --job " + job_path("p3_fault.json")).code == 3);
  CHECK(cli("indices --job " + job_path("not_integrable.json")).code == 2);
  CHECK(cli("check --job " + job_path("not_integrable.json")).code == 3);
  CHECK(cli("indices --job /nonexistent.json").code == 1);
  CHECK(cli("indices").code == 1);
  CHECK(cli("bogus").code == 1);
  CHECK(cli("indices --job " + job_path("example.json") + " --format xml").code == 1);
  CHECK(cli("indices --job " + job_path("example.json") + " --truncation 0").code == 1);
  CHECK(cli("indices --job " + job_path("example.json") + " --truncation 32").code == 0);
}

}
