#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace octomaze {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2, kExitBudget = 3 };

/// The octomaze command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace octomaze
