#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gl2n::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a mathematical check failed or is undefined
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gl2n::cli
