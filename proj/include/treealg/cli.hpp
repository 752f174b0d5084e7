#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace treealg {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitUsage = 2,
  kExitPropertyFailure = 3,
};

/// Runs one CLI invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treealg
