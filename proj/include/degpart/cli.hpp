#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace degpart {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;  // `verify` found a bad partition
inline constexpr int kExitUsage = 2;     // bad flags or unreadable input
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitInternal = 4;

// Runs one invocation. `args` excludes the program name.
// Subcommands: partition, verify, gen, bench.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degpart
