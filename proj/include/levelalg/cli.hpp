#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace levelalg::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalFailure = 1,
  kParseError = 2,
  kInvalidHVector = 3,
};

/// Runs the command line `args` (program name excluded). Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace levelalg::cli
