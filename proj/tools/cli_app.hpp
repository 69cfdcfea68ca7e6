#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schwartz::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kNumericError = 2,
  kIoError = 3,
  kVerificationFailed = 4,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schwartz::cli
