#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lopoly::cli {

enum ExitCode { ok = 0, domain_error = 1, usage_error = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lopoly::cli
