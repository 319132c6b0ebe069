#pragma once

#include <iosfwd>

namespace deltarep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand (repr, classify, cdf, charfn, lbound, dimension,
/// levelset, decompose, series). Tables go to `out` as CSV with CRLF line
/// endings, summaries as one-line JSON carrying "schema": 1.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace deltarep::cli
