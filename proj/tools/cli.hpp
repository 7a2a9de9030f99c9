#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcpoly::cli {

enum ExitCode : int {
  kSuccess = 0,
  kParseError = 1,
  kBudgetExceeded = 2,
  kVerificationFailed = 3,
};

/// Runs one command. args excludes the program name. The JSON result goes to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcpoly::cli
