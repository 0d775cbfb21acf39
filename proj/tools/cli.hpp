#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace slicereg::cli {

/// Exit codes: 0 success / equivalent / verified, 1 negative verdict or failed check,
/// 2 usage, parse or precondition error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command; `args` excludes the program name.  Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicereg::cli
