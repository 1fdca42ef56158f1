#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace awgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Version of the JSON record layout written by --out.
inline constexpr int kSchemaVersion = 1;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace awgraph::cli
