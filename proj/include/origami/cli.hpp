#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace origami::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kDomain = 3,  // domain, degenerate input, script errors
    kCheck = 4,   // assertion or residual failure
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace origami::cli
