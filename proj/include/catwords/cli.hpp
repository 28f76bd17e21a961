#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace catwords {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitUsage = 2,
};

/// Runs the command-line tool on `args` (without the program name). Results go
/// to `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace catwords
