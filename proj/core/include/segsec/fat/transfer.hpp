#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "segsec/fat/scheme.hpp"
#include "segsec/la/multi_prime.hpp"
#include "segsec/segre/terracini.hpp"

namespace segsec::fat {

/// Sample point k in the chart a_1...a_n != 0. The first draw is segre::sample_point, so
/// Terracini and transfer runs share points; draws leaving the chart are redrawn.
[[nodiscard]] segre::FactorPoint chart_point(unsigned n, std::size_t k, const PrimeField& f, const la::Rng& rng);

/// The affine chart map: ((a_i : b_i))_i -> (1 : b_1/a_1 : ... : b_n/a_n) in P^n.
[[nodiscard]] std::vector<Elem> chart_image(const segre::FactorPoint& pt, const PrimeField& f);

/// (n-1)e_1 + ... + (n-1)e_n + 2 chart_image(P_j) for the given factor points.
[[nodiscard]] Scheme transferred_scheme(const std::vector<segre::FactorPoint>& pts, const PrimeField& f);

struct TransferCell {
  std::uint64_t prime = 0;
  std::size_t trial = 0;
  std::size_t multigraded = 0;  // 2^n - rank of the stacked tangent rows
  std::size_t fatpoint = 0;     // dim (I_W)_n in P^n at the same points
};

struct TransferReport {
  unsigned n = 0;
  unsigned s = 0;
  std::vector<TransferCell> cells;
  [[nodiscard]] bool consistent() const noexcept;
};

/// Computes both sides at the same sampled points in every cell. Equality is exact per cell.
[[nodiscard]] TransferReport transfer_consistency(unsigned n, unsigned s, const la::SamplingConfig& cfg,
                                                  bool fast_path = true);

}  // namespace segsec::fat
