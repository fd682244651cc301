#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace poincare::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,
  kUsageError = 2,
};

// Runs one subcommand. args excludes the program name. The JSON payload goes
// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poincare::cli
