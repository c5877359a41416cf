#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace univalent::cli {

/// Process exit codes.
enum ExitCode : int {
  kPass = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kIoError = 3,
};

/// Runs one command line (args[0] is the program name). JSON and CSV go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace univalent::cli
