#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace onefactor::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 2,
  kCostGuard = 3,
};

// Runs the command line `argv[0..argc)` (argv[0] is the program name) and
// returns the process exit code. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace onefactor::cli
