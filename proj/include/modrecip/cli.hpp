#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modrecip::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,      // parse or usage error
  kUndefined = 2,  // inverse undefined or a stated hypothesis fails
  kViolation = 3,  // a verification sweep or bench agreement check failed
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. All output goes to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modrecip::cli
