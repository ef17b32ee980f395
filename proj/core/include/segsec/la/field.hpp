#pragma once

#include <array>
#include <cstdint>

namespace segsec::la {

/// Field elements are stored reduced, in [0, p).
using Elem = std::uint32_t;

inline constexpr Elem kDefaultPrime = 2147483647u;  // 2^31 - 1
inline constexpr std::array<Elem, 3> kDefaultPrimes{2147483647u, 2147483629u, 1073741789u};

/// Smallest modulus accepted by PrimeField (keeps Schwartz-Zippel bounds small).
inline constexpr std::uint64_t kMinPrime = std::uint64_t{1} << 20;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic modulo a word-sized prime 2^20 < p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  [[nodiscard]] Elem modulus() const noexcept { return p_; }

  [[nodiscard]] Elem reduce(std::uint64_t v) const noexcept { return static_cast<Elem>(v % p_); }
  [[nodiscard]] Elem from_signed(std::int64_t v) const noexcept;

  [[nodiscard]] Elem add(Elem a, Elem b) const noexcept {
    const Elem s = a + b;  // p < 2^31, no wrap
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  [[nodiscard]] Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(std::uint64_t{a} * b % p_);
  }
  [[nodiscard]] Elem pow(Elem base, std::uint64_t exp) const noexcept;
  /// Throws std::domain_error on zero.
  [[nodiscard]] Elem inv(Elem a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  Elem p_;
};

}  // namespace segsec::la
