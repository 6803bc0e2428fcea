#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uvd::cli {

// Exit codes of the uvd tool.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kIoError = 2;
inline constexpr int kInadmissible = 3;
inline constexpr int kBudget = 4;

/// Runs the tool on `args` (program name excluded). Data goes to `out`, or to
/// the file named by --out in which case the summary goes to `out`;
/// otherwise summaries and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uvd::cli
