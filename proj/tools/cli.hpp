#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lazyfinger::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kMalformed = 2,
  kInfeasible = 3,
};

// Runs one lftool invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lazyfinger::cli
