#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ndthin::cli {

enum ExitCode : int {
  kSuccess = 0,
  kAlgorithmError = 1,
  kUsageError = 2,
};

/// Runs one command line (without the program name). Output CSV goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ndthin::cli
