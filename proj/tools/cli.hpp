#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fca::cli {

enum ExitCode : int {
  kOk = 0,
  kImplicationFails = 1,
  kUsage = 2,
  kBadInput = 3,
  kIoError = 4,
};

/// Runs the `fca` command line. `args` excludes the program name. Regular
/// output goes to `out`, diagnostics to `err`; "-" as a path means stdin or
/// stdout.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fca::cli
