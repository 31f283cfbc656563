#pragma once

#include <iosfwd>

namespace sbkd::cli {

inline constexpr unsigned long long kDefaultSeed = 20240601ULL;

/// Entry point behind the `sbkd` executable. Returns the process exit code:
/// 0 success, 1 I/O or data error, 2 usage or configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sbkd::cli
