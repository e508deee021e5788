#pragma once

namespace sspalign {

/// Parses argv and runs one subcommand (validate, score, render,
/// calibrate-lambda). Returns the process exit code: 0 success,
/// 1 input validation failure, 2 I/O or configuration problem,
/// 3 scoring error.
int run_cli(int argc, const char* const* argv);

}  // namespace sspalign
