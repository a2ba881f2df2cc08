#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "biperiodic/suite.hpp"

namespace biperiodic::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,  // identity failure or cross-method mismatch
  kUsageError = 2,   // bad flags, bad parameters, unknown keys
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit code for a finished verification run. Printed-form mismatches alone
/// never fail a run.
ExitCode verify_outcome(const SuiteSummary& summary);

}  // namespace biperiodic::cli
