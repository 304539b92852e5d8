#pragma once

#include <iosfwd>

namespace primelab {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,              // success, prime, Found, witness found
    kExitNegative = 1,        // not prime, Exhausted, no witness
    kExitUsage = 2,           // usage or parameter error
    kExitBudgetExceeded = 3,  // search budget ran out
};

/// Entry point of the `primelab` tool; writes to the given streams instead of
/// the process streams so it can be driven from tests.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace primelab
