#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "folres/commands.hpp"
#include "folres/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact residues of codimension-one foliations"};
  app.require_subcommand(1, 1);

  std::string job_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> truncation;
  std::string format = "json";

  for (const char* name : {"check", "indices", "global", "paper-example"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--job", job_path, "job file (JSON)");
    sub->add_option("--seed", seed, "seed for all random choices");
    sub->add_option("--truncation", truncation, "series truncation order")->check(CLI::Range(1, 256));
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? folres::kExitOk : folres::kExitInputError;
  }

  const auto command = folres::parse_command(app.get_subcommands().front()->get_name());
  std::optional<folres::JobFile> job;
  folres::CommandResult result;
  try {
    if (!job_path.empty()) job = folres::load_job(job_path);
  } catch (const folres::Error& e) {
    std::cerr << "folres: " << e.what() << "\n";
    return folres::is_input_error(e.code()) ? folres::kExitInputError : folres::kExitComputationFailure;
  }
  if (seed || truncation) {
    if (!job && command == folres::Command::WorkedExample) job = folres::worked_example_job();
    if (job) {
      if (seed) job->options.seed = *seed;
      if (truncation) job->options.truncation = *truncation;
    }
  }
  result = folres::run_command(command, job);
  std::cout << (format == "table" ? result.table : result.report);
  return result.exit_code;
}
