#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace starlike::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_condition_failed = 1,
  exit_usage = 2,
  exit_numeric = 3,
};

/// Runs one subcommand. args excludes the program name. The JSON document
/// goes to out (or to --output), messages to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace starlike::cli
