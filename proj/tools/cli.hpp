#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgw::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,      // reproduce-paper found a value that does not match
  kUsage = 2,         // bad arguments or out-of-domain input
  kInconsistent = 3,  // two routes that must agree did not
};

/// Runs the sgw command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgw::cli
