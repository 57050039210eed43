#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chowsq::cli {

/// Exit codes of the command-line surface.
enum ExitCode : int {
  kOk = 0,         // computed or verified
  kViolation = 1,  // a verification found a violation, or witt returned "excluded"
  kUsage = 2,      // bad flags, out-of-range values, unparsable expressions
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chowsq::cli
