#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kirwan::cli {

// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kDataError = 2;      // validation or data inconsistency
inline constexpr int kNotRegular = 3;     // cut equals a fixed point's moment
inline constexpr int kNotInKernel = 4;    // NotInKernel / NotInImage
inline constexpr int kUsage = 64;

/// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kirwan::cli
