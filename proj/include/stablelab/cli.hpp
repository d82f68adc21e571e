#pragma once

#include <iosfwd>

namespace stablelab {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitViolations = 2, kExitCap = 3 };

/// Parses argv and runs one subcommand, writing the result to `out` (or to
/// --out) and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stablelab
