#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "segsec/la/multi_prime.hpp"

namespace segsec::segre {

using la::Elem;
using la::PrimeField;
using la::PrimeMatrix;
using la::Rng;
using la::SamplingConfig;

/// Largest n for which matrices over the 2^n Segre coordinates are built.
inline constexpr unsigned kMaxMatrixFactors = 20;

struct SecantProblem {
  unsigned n = 1;   // number of P^1 factors
  unsigned s = 1;   // number of secant points
  [[nodiscard]] std::uint64_t ambient() const { return (std::uint64_t{1} << n) - 1; }
};

/// Throws GuardViolation unless n >= 1 and s >= 1 (s == 0 allowed when allow_empty).
void validate(const SecantProblem& p, bool allow_empty = false);

/// One point of (P^1)^n: pair i is (a_i : b_i), never (0 : 0).
struct FactorPoint {
  std::vector<std::array<Elem, 2>> pairs;
  [[nodiscard]] unsigned n() const noexcept { return static_cast<unsigned>(pairs.size()); }
};

/// min(2^n - 1, s(n+1) - 1). Throws GuardViolation for n < 1, s < 1 or n > 62.
[[nodiscard]] std::uint64_t expected_dim(unsigned n, std::uint64_t s);

/// Uniform point with every coordinate in F_p, each pair resampled until nonzero.
[[nodiscard]] FactorPoint random_factor_point(unsigned n, const PrimeField& f, Rng& rng);

/// Coordinate S (bitmask, bit i <-> factor i+1) is prod_{i in S} b_i * prod_{i not in S} a_i.
[[nodiscard]] std::vector<Elem> segre_coordinates(const FactorPoint& pt, const PrimeField& f);

/// Direction replacing factor i in the tangent rows: (0,1) unless the pair is (0:b), then (1,0).
[[nodiscard]] std::array<Elem, 2> tangent_direction(const std::array<Elem, 2>& pair) noexcept;

/// (n+1) x 2^n: the Segre image, then the image with factor i replaced by its direction.
[[nodiscard]] PrimeMatrix tangent_rows(const FactorPoint& pt, const PrimeField& f);

/// Point k of a sample is drawn from rng.split(k), so an s-point sample is a prefix of every
/// larger one drawn from the same stream.
[[nodiscard]] FactorPoint sample_point(unsigned n, std::size_t k, const PrimeField& f, const Rng& rng);

/// Stacked tangent rows at s sampled points: s(n+1) x 2^n.
[[nodiscard]] PrimeMatrix terracini_matrix(unsigned n, unsigned s, const PrimeField& f, const Rng& rng);

struct DimensionReport {
  SecantProblem problem;
  std::uint64_t expected = 0;
  std::uint64_t observed = 0;   // max over cells of rank - 1
  std::uint64_t defect = 0;     // expected - observed
  std::uint64_t ideal_dim = 0;  // dim (I_Z)_(1,...,1) = 2^n - rank
  std::vector<std::uint64_t> primes;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t degree_bound = 0;  // D in the per-cell bound D/p
  double failure_bound = 0.0;
  std::vector<std::uint64_t> cell_dims;  // observed dimension per cell, prime-major
  std::size_t cells_agreeing = 0;        // cells whose dimension equals `observed`

  /// Defect claims need every cell to fall short by the same amount.
  [[nodiscard]] bool defect_confirmed() const noexcept {
    return defect > 0 && cells_agreeing == cell_dims.size();
  }
};

/// Terracini: dim sigma_s(V_n) = rank of the stacked tangent rows - 1, sampled per cfg.
[[nodiscard]] DimensionReport secant_dim_sample(const SecantProblem& problem, const SamplingConfig& cfg);

/// Reports for s = 1..s_max from one elimination per cell (prefix ranks of the s_max-point
/// matrix). Identical to calling secant_dim_sample for each s with the same cfg.
[[nodiscard]] std::vector<DimensionReport> secant_dim_profile(unsigned n, unsigned s_max,
                                                             const SamplingConfig& cfg);

/// dim (I_Z)_(1,...,1) = 2^n - rank; s = 0 gives 2^n.
[[nodiscard]] std::uint64_t multigraded_ideal_dim(const SecantProblem& problem, const SamplingConfig& cfg);

}  // namespace segsec::segre
