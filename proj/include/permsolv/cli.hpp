#ifndef PERMSOLV_CLI_HPP
#define PERMSOLV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace permsolv {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitHolds = 0,
  kExitFails = 1,
  kExitUsage = 2,
  kExitCap = 3,
  kExitEngine = 4, ///< internal consistency check failed
};

/// Parses argv, runs one subcommand and writes its report to `out`.
/// Diagnostics go to `err`. argv[0] is the program name.
int cli_dispatch(int argc, const char *const *argv, std::ostream &out,
                 std::ostream &err);

/// Same, with the arguments after the program name.
int cli_dispatch(const std::vector<std::string> &args, std::ostream &out,
                 std::ostream &err);

} // namespace permsolv

#endif
