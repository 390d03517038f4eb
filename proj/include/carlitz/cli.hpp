#pragma once

#include <iosfwd>

namespace carlitz {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitExtension = 3 };

/// Runs one command. `in` backs element arguments given as "-".
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace carlitz
