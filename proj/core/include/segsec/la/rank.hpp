#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "segsec/la/matrix.hpp"

namespace segsec::la {

/// Rank over the matrix's prime field. The input is copied.
[[nodiscard]] std::size_t rank(const PrimeMatrix& m);

/// Row rank profile: element i is the rank of the leading i+1 rows.
/// One elimination pass, so every prefix rank costs the same as the full rank.
[[nodiscard]] std::vector<std::size_t> rank_profile(const PrimeMatrix& m);

struct Echelon {
  PrimeMatrix reduced;              // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan reduction. Meant for small frames, not for the large rank workloads.
[[nodiscard]] Echelon rref(const PrimeMatrix& m);

/// Basis (as rows) of the right null space {v : m v = 0}.
[[nodiscard]] PrimeMatrix kernel_basis(const PrimeMatrix& m);

/// Inverse of a square matrix, or nullopt when singular.
[[nodiscard]] std::optional<PrimeMatrix> inverse(const PrimeMatrix& m);

}  // namespace segsec::la
