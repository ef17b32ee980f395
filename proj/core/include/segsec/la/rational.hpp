#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace segsec::la {

/// Exact rank over Q (big rationals). Slow; for small cross-checks of the modular path.
[[nodiscard]] std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows);

}  // namespace segsec::la
