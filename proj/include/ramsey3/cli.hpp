#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey3::cli {

/// Process exit codes.
enum ExitStatus : int {
    kSuccess = 0,        // success, or witness found
    kNotFound = 1,       // legitimate not-found / inconclusive
    kInvalidInput = 2,   // usage errors, malformed files, violated preconditions
    kFalsification = 3,  // a checked fact failed; never expected
};

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramsey3::cli
