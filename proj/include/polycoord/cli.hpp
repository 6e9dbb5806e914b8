#ifndef POLYCOORD_CLI_HPP
#define POLYCOORD_CLI_HPP

#include <ostream>

namespace polycoord::cli {

enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kHard = 2,
    kInputError = 3,
    kCapExceeded = 4,
};

/// Runs one command line and writes a single JSON document to `out`.
/// Failures are reported as {"error": {"kind": .., "message": ..}}.
int run(int argc, const char *const *argv, std::ostream &out);

} // namespace polycoord::cli

#endif // POLYCOORD_CLI_HPP
