#pragma once

#include <iosfwd>

namespace fcarel::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kDegenerate = 3,
    kSize = 4,
};

/// Runs one `fcarel` invocation. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fcarel::cli
