#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace li::cli {

/// Parses `args` (without the program name), runs the chosen command and
/// returns the process exit code. Errors become one diagnostic line on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace li::cli
