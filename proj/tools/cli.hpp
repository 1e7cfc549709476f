#pragma once

#include <iosfwd>

namespace corot::cli {

/// Exit codes: 0 success, 1 check/classification negative, 2 usage error, 3 domain error.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kDomain = 3 };

/// Runs the command line; all regular output goes to `out` (or --out FILE),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace corot::cli
