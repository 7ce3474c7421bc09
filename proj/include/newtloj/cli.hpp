#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace newtloj {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitParse = 2, kExitPrecondition = 3, kExitCrossCheck = 4 };

/// Runs one command line (without the program name). Standard output is
/// buffered and written only on success; every failure writes exactly one
/// diagnostic line to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace newtloj
