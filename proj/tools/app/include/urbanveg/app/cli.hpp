#pragma once

#include <iosfwd>

namespace urbanveg::app {

/// Exit codes of the urbanveg command.
enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitIo = 2 };

/// Runs the command line in-process. Results go to `out` (or the -o file),
/// diagnostics and usage text to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace urbanveg::app
