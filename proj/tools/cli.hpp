#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace revlcg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs the command line `revlcg <args...>` (args excludes the program name)
/// and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revlcg::cli
