#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stablenorm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitBudget = 4;

/// Runs one command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stablenorm::cli
