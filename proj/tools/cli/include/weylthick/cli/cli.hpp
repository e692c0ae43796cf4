#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weylthick::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; `args` excludes the program name. Documents go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylthick::cli
