#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tph::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1, // usage errors and shape mismatches
  kParse = 2,
  kUnsupported = 3, // positive right defect, zero sequence
  kCheckFailed = 4,
};

/// Runs one CLI invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tph::cli
