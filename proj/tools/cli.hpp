#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semiheap::cli {

/// Exit codes: 0 all checks pass, 1 a law or property fails (a witness line is
/// written), 2 usage, input or format error.
enum ExitCode : int { pass = 0, law_failure = 1, input_error = 2 };

/// Runs one command line. `args` excludes the program name. Reports go to
/// `out`, diagnostics and usage to `err`.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace semiheap::cli
