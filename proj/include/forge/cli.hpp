#pragma once

#include <ostream>

namespace forge {

/// The forge command line. JSON results go to out, diagnostics to err.
/// Returns 0 on a completed run (negative verdicts included), 1 on runtime
/// or domain errors, 2 on usage errors, 3 when a replay finds mismatches.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace forge
