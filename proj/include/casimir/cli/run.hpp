#pragma once

#include <ostream>

#include "casimir/cli/curve_output.hpp"
#include "casimir/cli/run_config.hpp"

namespace casimir::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kValidation = 2, kNumeric = 3 };

/// Dispatches one validated command. Sweep points run on thread_count() workers.
CurveOutput run(const RunConfig& cfg);

/// Parses flags over an optional --config file (flags win), runs, and writes the output
/// to --out or `out`. Diagnostics go to `err`. Returns an ExitCode.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
