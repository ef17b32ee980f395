#pragma once

#include <cstddef>

#include "segsec/fat/calculus.hpp"
#include "segsec/fat/scheme.hpp"

namespace segsec::horace {

/// dim (I_X)_t for any t >= 0. Unlike fat::ideal_dim it accepts t = 0 and components whose
/// multiplicity exceeds t + 1 (a nonzero form of degree t vanishes to order at most t).
[[nodiscard]] std::size_t ideal_dim_any(const fat::Scheme& x, unsigned t);

struct CastelnuovoReport {
  std::size_t res_dim = 0;    // dim (I_{Res_Π X})_{t-1} in P^n
  std::size_t trace_dim = 0;  // dim (I_{Tr_Π X, Π})_t
  std::size_t bound = 0;
  std::size_t direct = 0;     // dim (I_X)_t on the same sample
  [[nodiscard]] bool holds() const noexcept { return direct <= bound; }
};

/// Throws GuardViolation for t < 1 or a hyperplane in another ambient space.
[[nodiscard]] CastelnuovoReport castelnuovo_bound(const fat::Scheme& x, const fat::Hyperplane& pi, unsigned t);

struct LemzeroReport {
  std::size_t w_dim = 0;   // dim (I_{W, Π})_{n-1}, W = projection from Q_1 of Res_Π X
  std::size_t t_dim = 0;   // dim (I_{T, Π})_{n-1}, T = Res_{Π'} Tr_Π X
  std::size_t bound = 0;
  std::size_t direct = 0;  // dim (I_X)_n
  [[nodiscard]] bool holds() const noexcept { return direct <= bound; }
};

/// Q_i = e_i (i = 1..n). X must contain (n-1)Q_1 + ... + (n-1)Q_n; Π must pass through
/// Q_2..Q_n and miss Q_1. Violations throw GuardViolation.
[[nodiscard]] LemzeroReport lemzero_bound(const fat::Scheme& x, const fat::Hyperplane& pi);

}  // namespace segsec::horace
