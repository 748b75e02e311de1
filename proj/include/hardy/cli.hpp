#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hardy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
/// Subcommands: reproduce, eval, check, quantum, numerals.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardy::cli
