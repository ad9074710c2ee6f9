#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wlanrr::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kPreconditionError = 3,
  kInfeasible = 4,
  kPropertyFailure = 5,
};

/// Run the command line `args` (args[0] is the program name). Data goes to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wlanrr::cli
