#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segsec::cli {

/// Exit codes: 0 results match the expected values, 1 genuine mismatch, 2 usage or
/// validation error.
enum Exit : int { kMatch = 0, kMismatch = 1, kUsage = 2 };

/// Runs `segsec <args...>`. Data goes to `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segsec::cli
