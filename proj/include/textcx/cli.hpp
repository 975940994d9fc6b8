#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace textcx {

// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2 };

// Runs one command line (args[0] is the program name). Data goes to `out`,
// diagnostics and help text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace textcx
