#pragma once

#include <iosfwd>
#include <string_view>

namespace edeg::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kFailure = 1, kParameterError = 2, kNonConvergence = 3 };

/// Parses argv and runs one subcommand, writing results to `out` and
/// diagnostics to `err`. Never throws; failures map to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edeg::cli
