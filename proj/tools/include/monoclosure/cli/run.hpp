#pragma once

#include "monoclosure/cli/run_config.hpp"

#include <iosfwd>

namespace monoclosure::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Executes one command. Reports go to `out`, diagnostics to `err`.
/// Output depends only on `config`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv in, exit code out; what main() calls.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monoclosure::cli
