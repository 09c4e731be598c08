#pragma once

#include <ostream>

namespace jtvo::cli {

// Exit codes of the jtvo tool.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

// Parses argv and runs one subcommand, writing the report to `out` and
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jtvo::cli
