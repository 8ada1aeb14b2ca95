#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gflasso::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 2;
inline constexpr int kNotConverged = 3;
inline constexpr int kNumericError = 4;

inline constexpr const char* kVersion = "0.1.0";

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gflasso::cli
