#pragma once

#include <ostream>

namespace drinfeld {

/// Exit codes of the command-line interface.
enum ExitCode : int {
    kExitOk = 0,
    kExitNotRealizable = 1,
    kExitValidation = 2,
    kExitResource = 3,
    kExitInternal = 4,  // TheoryViolation or an unexpected exception
};

/// Entry point of the `drinfeld` tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace drinfeld
