#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smncubic {

// Exit codes of the command line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitCheckFailed = 3;
inline constexpr int kExitNoTriangle = 4;

// --check fails (exit 3) when the three-way root discrepancy exceeds this.
inline constexpr double kCheckGate = 1e-6;

/// Run the CLI (subcommands: classify | solve | batch | render) on the given
/// argument list (without argv[0]).  All normal output goes to `out`,
/// diagnostics to `err`.  Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smncubic
