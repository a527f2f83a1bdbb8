#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace tricent::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kParseFailure = 2,
  kConvergenceFailure = 3,
  kInvalidForGraph = 4,
};

// Runs `tricent <command> ...` with args excluding the program name. Data goes
// to `out` only on success; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tricent::cli
