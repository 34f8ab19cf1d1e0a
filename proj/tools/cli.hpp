#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covsim::cli {

/// Exit codes of the simcheck command.
enum ExitCode : int {
  kHolds = 0,     // relation holds, formula true, oracle agrees
  kFails = 1,     // relation fails, formula false, oracle mismatch (evidence printed)
  kBadInput = 2,  // usage error, unreadable file, parse error, alphabet mismatch
};

/// Runs one simcheck invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covsim::cli
