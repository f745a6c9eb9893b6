#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bjorth::cli {

enum ExitCode : int {
  kOk = 0,              // success, or ORTHOGONAL
  kNotOrthogonal = 1,   // check / witness only
  kInputError = 2,
  kNumericalFailure = 3,
};

/// Runs the command line `args` (args[0] is the program name). JSON goes to
/// `out` (or --out FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bjorth::cli
