#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerspline::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name).
/// Returns 0 on success, 1 when a verification fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerspline::cli
