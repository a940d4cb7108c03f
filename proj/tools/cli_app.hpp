#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace momsynth::cli {

enum ExitCode : int {
    ok = 0,
    input_error = 1,
    pipeline_error = 2,
    verification_failed = 3,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// files named by --out, or to `out` when absent; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace momsynth::cli
