#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sonc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitMultistationary = 2;
inline constexpr int kExitUsage = 64;

/// Entry point of the sonc-mono tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sonc
