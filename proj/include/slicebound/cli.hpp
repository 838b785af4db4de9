#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slicebound {

enum ExitCode : int {
  kExitCertified = 0,
  kExitRefuted = 1,
  kExitInputError = 2,
  kExitUndecidable = 3,
};

/// Runs the command line (args[0] is the program name).  Commands other than
/// certify exit with 0 on success and 2 on input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicebound
