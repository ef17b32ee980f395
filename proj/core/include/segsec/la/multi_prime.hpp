#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "segsec/la/field.hpp"
#include "segsec/la/matrix.hpp"
#include "segsec/la/rng.hpp"

namespace segsec::la {

struct SamplingConfig {
  std::vector<std::uint64_t> primes{kDefaultPrimes.begin(), kDefaultPrimes.end()};
  std::size_t trials = 3;
  Seed seed = kDefaultSeed;
};

/// Throws GuardViolation on an empty prime list or zero trials, and std::invalid_argument
/// (from PrimeField) on a modulus that is composite or below 2^20.
void validate(const SamplingConfig& cfg);

/// The generator for cell (prime, trial). Streams are keyed by the prime's value, not its
/// position in the list, so adding primes or trials never changes existing cells.
[[nodiscard]] Rng cell_rng(Seed seed, std::uint64_t prime, std::size_t trial) noexcept;

struct RankCell {
  std::uint64_t prime = 0;
  std::size_t trial = 0;
  std::size_t rank = 0;
};

struct MultiRankResult {
  std::size_t rank = 0;          // max over cells
  std::vector<RankCell> cells;   // prime-major, trial-minor
  std::uint64_t degree_bound = 0;
  /// Schwartz-Zippel bound D/p for one cell at the smallest prime used; 0 when D is unknown.
  double failure_bound = 0.0;
};

using MatrixBuilder = std::function<PrimeMatrix(const PrimeField&, Rng&)>;

/// Max rank over every (prime, trial) cell. `degree_bound` is the total degree of the
/// matrix's nonvanishing minor in the random parameters, reported alongside the result.
[[nodiscard]] MultiRankResult multi_prime_rank(const MatrixBuilder& build, const SamplingConfig& cfg,
                                               std::uint64_t degree_bound = 0);

/// Runs fn(0..count-1) on a small pool. Order of side effects is unspecified; callers write
/// into preallocated slots so results do not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace segsec::la
