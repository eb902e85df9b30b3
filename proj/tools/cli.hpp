#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spinwreath::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kVerification = 3 };

// Runs one command line (without the program name). Documents go to `out`
// unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinwreath::cli
