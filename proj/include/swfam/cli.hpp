#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace swfam {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit status: 0 success, 1 usage error, 2 validation error,
/// 3 internal cross-check failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace swfam
