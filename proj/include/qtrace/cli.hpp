#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qtrace/registry.hpp"

namespace qtrace::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { ok = 0, failed = 1, usage = 2 };

/// Parses "k=1,t=2" (values may be "a/b" or negative) into a parameter map.
/// Repeated keys throw std::invalid_argument.
zoo::Params parse_params(const std::vector<std::string>& specs);

/// Runs the command line `args` (without the program name). Normal output goes
/// to `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qtrace::cli
