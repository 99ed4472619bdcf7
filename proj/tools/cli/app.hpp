#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parking::cli {

enum ExitCode : int {
    kOk = 0,
    kExpectationFailed = 1,
    kCapExceeded = 2,
    kInputError = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace parking::cli
