#pragma once

#include <ostream>

namespace purefield::cli {

enum ExitCode : int { Success = 0, VerifyFailed = 1, BadInput = 2, ResourceLimit = 3 };

/// Runs the `purefield` command line. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace purefield::cli
