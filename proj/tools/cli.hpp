#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecdkit::cli {

enum ExitCode : int { kOk = 0, kUnexpected = 1, kInputError = 2, kNumericError = 3 };

/// Runs one command. `args` excludes the program name. Machine-readable
/// output goes to files or `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecdkit::cli
