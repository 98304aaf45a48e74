#ifndef BETTICERT_TOOLS_CLI_HPP
#define BETTICERT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace betticert::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFailed = 1;
inline constexpr int kInputError = 2;

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betticert::cli

#endif  // BETTICERT_TOOLS_CLI_HPP
