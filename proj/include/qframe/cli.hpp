#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qframe {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,          // success, or a true verdict
  kExitFalse = 1,       // false verdict or failed verification
  kExitUsage = 2,
  kExitNumeric = 3,     // numeric, parse or validation error
};

/// Runs one CLI invocation. `args` excludes the program name. The report goes
/// to `out`, diagnostics to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qframe
