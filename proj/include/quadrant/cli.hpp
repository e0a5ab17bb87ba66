#pragma once

#include <iosfwd>

namespace quadrant::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

/// Entry point of the `quadrant` tool. Subcommands: info, scan, verify.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quadrant::cli
