#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vinpos::cli {

/// Stable across every subcommand.
enum ExitCode : int {
  kExitOk = 0,        // success / true
  kExitNegative = 1,  // false, not comparable, not applicable, flagged
  kExitUsage = 2,
  kExitIo = 3,
};

/// Runs the command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vinpos::cli
