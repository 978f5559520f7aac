#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankone::cli {

/// Exit codes: 0 success / completable, 2 well-formed input with a negative
/// answer, 1 input or usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;

/// Runs one command line (args[0] is the program name). JSON results go to
/// `out`; errors go to `err` as {"error": {"code": ..., "message": ...}}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankone::cli
