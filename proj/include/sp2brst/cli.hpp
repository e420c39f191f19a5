#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sp2brst {

/// Exit codes of the command-line pipeline.
enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitInputError = 2,
};

/// Runs one CLI invocation; args exclude the program name. Reports go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sp2brst
