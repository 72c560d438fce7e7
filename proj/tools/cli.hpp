#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace effalg::cli {

/// Exit codes of the `effalg` tool.
enum ExitCode : int {
    kOk = 0,       // success, property holds, state found
    kFailure = 1,  // property fails, no state, law failure, invalid algebra
    kUsage = 2,    // bad usage or unparsable input
};

/// Runs the command line `args` (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace effalg::cli
