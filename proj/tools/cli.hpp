#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcnet::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

/// Runs one command line (program name excluded) and returns the exit code.
/// Everything is written to `out` and `err`; nothing touches global streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcnet::cli
