#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdet {

/// Exit codes of the command-line front end.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (arguments without the program name). Reports go
/// to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cdet
