#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stas::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace stas::cli
