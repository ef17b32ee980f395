#pragma once

#include <cstdint>
#include <vector>

#include "segsec/la/field.hpp"

namespace segsec::la {

/// 64-bit seed for every random choice made by the library.
struct Seed {
  std::uint64_t value = 0;
  bool operator==(const Seed&) const = default;
};

inline constexpr Seed kDefaultSeed{20090601};

/// Counter-based splittable generator (SplitMix64 finalizer over key + counter).
///
/// A stream is identified by its key; `split(tag)` derives an independent child stream, so
/// callers can address "point k of trial j under prime p" directly without consuming a shared
/// sequence. This is what makes s-point samples prefixes of (s+1)-point samples.
class Rng {
 public:
  explicit Rng(Seed seed) noexcept;

  [[nodiscard]] Rng split(std::uint64_t tag) const noexcept;
  std::uint64_t next() noexcept;
  /// Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t uniform(std::uint64_t bound) noexcept;
  Elem uniform(const PrimeField& f) noexcept { return static_cast<Elem>(uniform(f.modulus())); }
  Elem nonzero(const PrimeField& f) noexcept { return static_cast<Elem>(1 + uniform(f.modulus() - 1)); }

 private:
  Rng(std::uint64_t key, int) noexcept : key_(key) {}
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Uniform vector in F_p^len.
[[nodiscard]] std::vector<Elem> random_vector(std::size_t len, const PrimeField& f, Rng& rng);

/// A point of P^dim: dim+1 coordinates, not all zero, first nonzero coordinate equal to 1.
[[nodiscard]] std::vector<Elem> random_projective_point(std::size_t dim, const PrimeField& f, Rng& rng);

/// Scales so the first nonzero coordinate is 1. The zero vector is returned unchanged.
void normalize_projective(std::vector<Elem>& v, const PrimeField& f);

}  // namespace segsec::la
