#pragma once

#include <iosfwd>

namespace ygraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitInvalidInput = 2;

/// Entry point of the `ygraph` tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ygraph
