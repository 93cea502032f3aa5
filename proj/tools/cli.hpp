#pragma once

#include <iosfwd>

namespace wzpi {

/// Exit codes of the command-line tool.
enum ExitCode { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2, kExitInternal = 3 };

/// Entry point of the `wzpi` tool with injectable streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace wzpi
