#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stabline::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationError = 1,
    kOracleMismatch = 2,
    kIoError = 3,
};

/// Runs the command line `args` (without the program name). Input is read
/// from `in` unless --input names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace stabline::cli
