#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trisat::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kMismatch = 2,
  kBudget = 3,
};

/// Runs one command line. Results go to `out`, error objects to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trisat::cli
