#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fractoep::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kNumerical = 3;

// Parses args (without the program name), runs the subcommand, writes CSV to
// --out or to `out`, diagnostics to `err`. Returns an exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fractoep::cli
