#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbm::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitUnbounded = 3;

/// Runs one command. `args` excludes the program name. The JSON result goes
/// to `out`, a short human summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbm::cli
