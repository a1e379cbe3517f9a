#pragma once

#include <string>
#include <vector>

namespace ramlab::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage or regime error.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs one command line (without the program name) and captures its output.
CommandResult run(const std::vector<std::string>& args);

}  // namespace ramlab::cli
