#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace taut::cli {

enum ExitCode : int { ok = 0, parse_error = 1, unsupported = 2, resource = 3 };

/// Runs the tautring command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taut::cli
