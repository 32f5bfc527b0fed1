#pragma once

#include <iosfwd>

namespace sumprod::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. Regular output goes to `out`, diagnostics and
/// usage text to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sumprod::cli
