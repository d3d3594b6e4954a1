#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilbij::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). JSON input is
/// read from `in` unless --input or --data is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nilbij::cli
