#pragma once

#include <string>
#include <vector>

namespace spatter {

/// Runs one pipeline command exactly like the installed binary:
/// args are argv[1..] (subcommand plus flags). Returns the process exit code:
/// 0 success, 1 usage/config error, 2 data/validation error, 3 internal error.
int run_cli(const std::vector<std::string>& args);

}  // namespace spatter
