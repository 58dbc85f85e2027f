#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mband::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,   ///< affirmative result
    kNegative = 1,  ///< series failed the check, or a forecast was refused
    kUsage = 2,     ///< bad flags or unusable input
};

/// Runs the command line `args` (without the program name). Machine-readable
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mband::cli
