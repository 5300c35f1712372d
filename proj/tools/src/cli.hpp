#pragma once

#include <string>
#include <vector>

namespace mdenum::cli {

enum ExitCode { kOk = 0, kUsage = 1, kResourceGuard = 2, kCrossCheck = 3 };

struct Outcome {
  int status = kOk;
  std::string out;
  std::string err;
};

/// Parses `args` (without the program name), runs one job and renders it.
Outcome run(const std::vector<std::string>& args);

}  // namespace mdenum::cli
