#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigraph::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kDataError = 2;
inline constexpr int kVerifyFailed = 3;

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trigraph::cli
