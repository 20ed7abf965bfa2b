#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace powelem {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitFailure = 1,
  kExitUsage = 2,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powelem
