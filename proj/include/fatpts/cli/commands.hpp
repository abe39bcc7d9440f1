#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fatpts::cli {

enum ExitCode : int {
  kSuccess = 0,
  /// Not ACM, a bound violated, or formula and oracle disagree.
  kNegative = 1,
  kInputError = 2,
};

/// Runs one command line (without the program name). Reads the scheme from
/// `in` unless --input names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fatpts::cli
