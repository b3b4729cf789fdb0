#pragma once

#include <string>
#include <vector>

namespace cutpaste::cli {

struct CommandResult {
  int exit_code = 0;  // 0 success, 1 violation found, 2 input error
  std::string out;
  std::string err;
};

// Arguments exclude the program name. Never throws.
CommandResult run(const std::vector<std::string>& args);

}  // namespace cutpaste::cli
