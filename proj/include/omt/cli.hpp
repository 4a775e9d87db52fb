#pragma once

#include <iosfwd>

namespace omt {

/// Exit codes of the command line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitInputError = 2;

/// Runs `omtutte` with the given arguments (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace omt
