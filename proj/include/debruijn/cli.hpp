#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace debruijn::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInfeasible = 2,
  kUsageError = 3,
  kGuardExceeded = 4,
};

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`; sequence input not given on the command line is read
// from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace debruijn::cli
