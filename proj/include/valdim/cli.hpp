#pragma once

#include <iosfwd>

namespace valdim {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Runs the command-line interface; reports go to out, diagnostics to err.
// Returns 0 on success, 1 when a check fails, 2 on usage, parse or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace valdim
