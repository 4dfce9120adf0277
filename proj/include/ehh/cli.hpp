#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ehh {

/// Exit codes of the command-line surface.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,        // usage, parse and parameter errors
    kExitPrecondition = 2, // precondition violated (long hole found, disconnected input, invalid certificate)
    kExitInternal = 3,     // a produced certificate failed re-verification
};

/// Runs one subcommand. `args` excludes the program name. Graph input is read
/// from the named file or from `in` for "-"; machine output goes to --output
/// or `out`; diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace ehh
