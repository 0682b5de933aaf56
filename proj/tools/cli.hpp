#pragma once

#include <ostream>

namespace frobpush::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kOutOfRegime = 3 };

/// Runs the frobpush command line.  Results go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frobpush::cli
