#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sixv::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kParameterError = 2,
  kCapExceeded = 3,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sixv::cli
