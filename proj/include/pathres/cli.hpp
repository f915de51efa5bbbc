#pragma once

#include <iosfwd>

namespace pathres {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitIo = 1, kExitValidation = 2 };

/// Runs the `pathres` command line. Output goes to `out`, diagnostics to
/// `err`; the return value is one of ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pathres
