#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "folres/job.hpp"

namespace folres {

enum class Command { Check, Indices, Global, WorkedExample };

/// Exit codes shared by the CLI and the Python module.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitComputationFailure = 2;
inline constexpr int kExitCheckFailed = 3;

/// Throws InvalidInput for an unknown name.
Command parse_command(std::string_view name);
std::string_view command_name(Command command) noexcept;

struct CommandResult {
  int exit_code = kExitOk;
  /// Machine report (JSON), identical for identical job and seed.
  std::string report;
  /// Human-readable rendering of the same report.
  std::string table;
};

/// The built-in worked example: omega = 2yz dx + 3xz dy + 4xy dz with Z = {y = z = 0}.
JobFile worked_example_job();

/// Runs a command; errors are captured in the report and mapped to exit codes.
/// WorkedExample ignores `job` unless it is given, in which case only its options are used.
CommandResult run_command(Command command, const std::optional<JobFile>& job);

/// Same, parsing the job text first; JSON or expression errors give exit code 1.
CommandResult run_command_text(Command command, std::string_view job_json);

}  // namespace folres
