#pragma once

#include <iosfwd>

namespace triadcert::cli {

// Exit codes.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

/// Entry point of the triadcert binary with injectable streams.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace triadcert::cli
