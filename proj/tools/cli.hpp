#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hotspots::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kSuccess = 0,
  kInvalidInput = 1,
  kNumericalFailure = 2,
  kInvariantViolation = 3,
};

/// Run one invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hotspots::cli
