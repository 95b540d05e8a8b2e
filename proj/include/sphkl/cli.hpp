#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sphkl {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kInputError = 2,
    kTheoremViolation = 3,
    kInternalError = 4,
};

/// Runs the command line `args` (without the program name), writing the report to
/// `out` and diagnostics to `err`. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sphkl
