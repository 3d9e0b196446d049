#pragma once

#include <iosfwd>

namespace sinc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of `sinc-expdecay <run|domain|verify|plotscript> [flags]`.
/// Standard output and standard error are injected so tests can capture them.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sinc::cli
