#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gvpt::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

// Parses argv (without the program name) and runs one subcommand. Data goes to
// out (or the --output file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gvpt::cli
