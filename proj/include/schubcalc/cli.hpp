#pragma once

// Batch front end. Exit codes: 0 success, 1 verification failure or an
// expansion outside the span, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace schubcalc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name. `in` feeds `reduce` and `expand`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace schubcalc::cli
