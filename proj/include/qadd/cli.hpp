#pragma once

/// @file cli.hpp
/// @brief Command dispatch for the `qadd` tool, callable in-process for tests.

#include <iosfwd>
#include <string>
#include <vector>

namespace qadd::cli {

enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kUsage = 2,
    kCheckFailed = 3,
};

/// Runs one command. `args` includes the program name at index 0.
/// Command output goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qadd::cli
