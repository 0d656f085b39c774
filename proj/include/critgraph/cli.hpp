#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace critgraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSearchFailed = 2;
inline constexpr int kExitCapExceeded = 3;

// args[0] is the program name. Normal output goes to `out`, diagnostics and
// progress to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace critgraph
