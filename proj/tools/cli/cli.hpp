#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nmapgen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitProcessingError = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (args[0] is the program name), runs the selected
/// subcommand and returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nmapgen::cli
