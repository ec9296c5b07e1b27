#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibpart::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

/// Runs the command line `args` (args[0] is the program name). Classify reads
/// whitespace-separated integers from `in` when given no arguments.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace fibpart::cli
