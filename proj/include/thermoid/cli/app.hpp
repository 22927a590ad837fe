#pragma once

#include <ostream>
#include <span>
#include <string>

namespace thermoid::cli {

/// Runs the command line (without the program name). Returns the process exit
/// status; reports go to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace thermoid::cli
