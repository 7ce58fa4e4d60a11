#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fanplanar::cli {

enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2 };

// Runs one subcommand. `args` excludes the program name. JSON (with --json)
// or a short human summary goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fanplanar::cli
