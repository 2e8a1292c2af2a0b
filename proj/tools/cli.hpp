#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace horex::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line tool; args excludes the program name.
/// Reports go to `out`, diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horex::cli
