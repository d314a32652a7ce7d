#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sknmill::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

/// Runs one command. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; the return value is the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sknmill::cli
