#pragma once

#include <string>
#include <vector>

namespace pdmosc::cli {

/// Runs one CLI invocation (arguments without the program name).
/// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.
int run(const std::vector<std::string>& args);

}  // namespace pdmosc::cli
