#pragma once

#include <iosfwd>

namespace funcbody {

/// Exit codes: 0 success, 1 a check failed, 2 bad input, 3 numeric failure.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitBadInput = 2, kExitNumeric = 3 };

/// Runs one job of the batch front end. Results go to `out` (or --out),
/// diagnostics to `err`; FUNCBODY_LOG in {quiet, info, debug} sets verbosity.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace funcbody
