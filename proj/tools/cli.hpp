#pragma once

#include <ostream>

namespace eqlines::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationFailure = 1,
    kUsageError = 2,
};

/// Runs the command line front end; output goes to `out` and `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eqlines::cli
