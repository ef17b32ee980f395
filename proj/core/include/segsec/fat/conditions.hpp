#pragma once

#include <cstddef>

#include "segsec/fat/scheme.hpp"

namespace segsec::fat {

/// Linear conditions on degree-t forms imposed by a scheme.
struct ConditionsSystem {
  PrimeMatrix matrix;          // one row per condition, one column per surviving monomial
  std::size_t monomials = 0;   // C(t+n, n)
  std::size_t columns = 0;     // monomials not already killed by coordinate components

  /// dim (I_X)_t = surviving columns - rank.
  [[nodiscard]] std::size_t ideal_dim() const;
};

/// Rows a fat point of multiplicity m imposes: C(n+m-1, n) (order m-1 partials; lower
/// orders follow by Euler's relation since t < p).
[[nodiscard]] std::size_t fat_point_rows(unsigned n, unsigned m);

/// Builds the conditions.
///
/// Fat point (P, m): every partial derivative of order m-1 evaluated at P.
/// Linear space (Λ, ℓ): in a frame (u, y) with Λ = {y = 0}, every coefficient of u^α y^β with
/// |β| < ℓ of the transformed form.
///
/// With fast_path, components supported on coordinate points or coordinate subspaces are
/// monomial ideals; their monomials are removed from the column set instead of contributing
/// rows. The resulting dimension is identical.
///
/// Throws GuardViolation for t < 1 or a fat point with m > t+1, ResourceLimit outside the
/// degree envelope.
[[nodiscard]] ConditionsSystem conditions(const Scheme& x, unsigned t, bool fast_path = true);

/// The full conditions matrix over all C(t+n, n) monomials (no fast path).
[[nodiscard]] PrimeMatrix conditions_matrix(const Scheme& x, unsigned t);

/// dim (I_X)_t for this concrete scheme.
[[nodiscard]] std::size_t ideal_dim(const Scheme& x, unsigned t, bool fast_path = true);

}  // namespace segsec::fat
