#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace delisle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (without the program name) against the given
/// streams and returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace delisle::cli
