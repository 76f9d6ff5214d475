#ifndef MSV_CLI_HPP
#define MSV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace msv {

/// Exit codes of the msv tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitNotToric = 3,
};

/// Runs `msv <subcommand> ...`; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace msv

#endif
