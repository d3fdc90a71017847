#pragma once
// The zeta4 command line: subcommands form, omega, measure, verify, group.
// Exit status 0 on success, 1 on a failed check or invariant, 2 on invalid input.

#include <iosfwd>
#include <string>
#include <vector>

namespace zeta4 {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;

/// args excludes the program name. The JSON document goes to out (or to the
/// --out file); diagnostics and timings go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeta4
