// Command-line front end.  run_cli is the whole program minus process
// setup, so tests can drive it in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mckay::cli {

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kUsageError = 2 };

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mckay::cli
