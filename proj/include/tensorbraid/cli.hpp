#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tensorbraid {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitInternalError = 3,
  kExitPrecondition = 4,
};

// Entry point of the command-line tool.  `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tensorbraid
