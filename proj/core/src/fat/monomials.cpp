#include "segsec/fat/monomials.hpp"

#include <string>

#include "segsec/errors.hpp"

namespace segsec::fat {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays exact: r is C(n-k+i-1, i-1).
    const std::uint64_t num = n - k + i;
    if (r > UINT64_MAX / num) return UINT64_MAX;
    r = r * num / i;
  }
  return r;
}

void check_degree_envelope(unsigned n, unsigned t) {
  if (t > kMaxDegree)
    throw ResourceLimit("degree " + std::to_string(t) + " exceeds the limit " + std::to_string(kMaxDegree));
  const auto count = binomial(std::uint64_t{t} + n, n);
  if (count > kMaxMonomials)
    throw ResourceLimit("C(t+n, n) = " + std::to_string(count) + " monomials exceeds the limit " +
                        std::to_string(kMaxMonomials) + " (n=" + std::to_string(n) +
                        ", t=" + std::to_string(t) + ")");
}

MonomialBasis::MonomialBasis(unsigned vars, unsigned t) : vars_(vars), t_(t) {
  if (vars == 0) return;
  check_degree_envelope(vars - 1, t);
  count_ = binomial(std::uint64_t{t} + vars - 1, vars - 1);
  exps_.reserve(count_ * vars);
  std::vector<std::uint8_t> cur(vars, 0);
  // Odometer over compositions of t, lexicographically decreasing.
  cur[0] = static_cast<std::uint8_t>(t);
  while (true) {
    exps_.insert(exps_.end(), cur.begin(), cur.end());
    // Find the rightmost nonzero entry that is not the last variable.
    int j = static_cast<int>(vars) - 2;
    while (j >= 0 && cur[j] == 0) --j;
    if (j < 0) break;
    const std::uint8_t tail = cur[vars - 1];
    cur[vars - 1] = 0;
    --cur[j];
    cur[j + 1] = static_cast<std::uint8_t>(tail + 1);
  }
}

}  // namespace segsec::fat
