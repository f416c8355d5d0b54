#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nobeling::cli {

enum ExitCode : int { kOk = 0, kRuntimeError = 1, kConfigError = 2 };

/// Runs the command line `args` (program name excluded). Certificates and
/// other results go to `out` unless redirected to files; diagnostics go to
/// `err`; `move eval` reads points from `in` when no file is given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

}  // namespace nobeling::cli
