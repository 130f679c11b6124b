#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gml::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2, kDivergent = 3 };

/// Runs one command line (args[0] is the program name). Reports go to `out`,
/// diagnostics to `err`; `in` backs the "-" file name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gml::cli
