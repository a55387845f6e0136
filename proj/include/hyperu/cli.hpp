#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperu::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs one command line (program name excluded). JSON results go to `out`;
/// failures are reported on `err` as {"error": code, "detail": text}.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hyperu::cli
