#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgegraph {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitValidation = 1,
  kExitVerification = 2,
  kExitResourceLimit = 3,
};

/// Runs the tool on `args` (without the program name). JSON payloads go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodgegraph
