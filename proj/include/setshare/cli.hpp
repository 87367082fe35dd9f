#pragma once

#include <ostream>

namespace setshare {

/// Process exit codes of the `setshare` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,  // malformed input file or command line
  kExitSemantic = 2,
  kExitCounterexample = 3,
};

/// Entry point of the tool with the streams injected, so tests can capture
/// output. Results go to `out`; diagnostics and timings go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace setshare
