#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rmis {

// exit codes shared by the command line tool
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSizeGuard = 3;

/// Dispatches one command line invocation (argv without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rmis
