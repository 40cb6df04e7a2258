#pragma once

#include <ostream>

namespace mlur::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Entry point shared by the `mlur` binary and the tests. Writes results to
/// `out` (or the --out file) and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mlur::cli
