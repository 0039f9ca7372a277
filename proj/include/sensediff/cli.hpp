#pragma once

#include <string>
#include <vector>

namespace sensediff {

// Runs the sensediff command line. Returns the process exit code:
// 0 success, 2 configuration error, 3 data error.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

}  // namespace sensediff
