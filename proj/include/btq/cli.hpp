#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace btq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;

/// Entry point of the `btq` tool. `args` includes the program name. Results
/// go to `out` unless --out names a file; diagnostics go to `err` as a single
/// line naming the error kind.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace btq::cli
