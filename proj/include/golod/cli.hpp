#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace golod::cli {

/// Exit statuses: success or a positive verdict, a definitive negative verdict
/// (strong gcd failure, no order exists, nontrivial product, engine mismatch),
/// and "could not compute" (bad input, caps, improper ideals).
enum ExitCode : int { kSuccess = 0, kError = 1, kNegative = 2 };

/// Environment variable consulted for the default coefficient field.
inline constexpr const char* kFieldEnv = "GOLOD_FIELD";

/// Runs one command line (without the program name). Results go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace golod::cli
