#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wrd::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,     // bad arguments, unreadable or malformed files
  kNegative = 2,  // UNSAT, or a rejected solution
  kBudget = 3,    // search budget exhausted
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wrd::cli
