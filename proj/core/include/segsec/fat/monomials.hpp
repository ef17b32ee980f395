#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace segsec::fat {

inline constexpr unsigned kMaxDegree = 32;
inline constexpr std::uint64_t kMaxMonomials = 10'000'000;

/// C(n, k), saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Throws ResourceLimit when t > 32 or C(t+n, n) > 10^7.
void check_degree_envelope(unsigned n, unsigned t);

/// All exponent vectors of total degree t in `vars` variables, in lexicographically
/// decreasing order (x_0^t first).
class MonomialBasis {
 public:
  MonomialBasis(unsigned vars, unsigned t);

  [[nodiscard]] unsigned vars() const noexcept { return vars_; }
  [[nodiscard]] unsigned degree() const noexcept { return t_; }
  [[nodiscard]] std::size_t size() const noexcept { return count_; }
  [[nodiscard]] std::span<const std::uint8_t> operator[](std::size_t i) const noexcept {
    return {exps_.data() + i * vars_, vars_};
  }

 private:
  unsigned vars_;
  unsigned t_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> exps_;
};

}  // namespace segsec::fat
