#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "segsec/horace/profile.hpp"

namespace segsec::horace {

/// One inequality or identity evaluated exactly.
struct AppendixRow {
  unsigned n = 0;
  std::string branch;  // "e", "e*", or "n" for rows that do not depend on s
  std::string label;
  std::string detail;  // the evaluated sides
  bool holds = false;
};

struct AppendixReport {
  unsigned n_min = 0, n_max = 0;
  std::vector<AppendixRow> rows;
  std::size_t violations = 0;
  [[nodiscard]] bool passed() const noexcept { return violations == 0; }
  [[nodiscard]] std::optional<AppendixRow> first_violation() const;
};

/// Every n in [n_min, n_max] with s in {e, e*} odd: feasibility of the specialization, lemma
/// case coverage for W' and T' (including the sporadic small-n rows), the surplus identities
/// through 2^n = (n+1)h + k, the final totals, and the polynomial bounds the lemmas rely on.
/// Throws GuardViolation unless 5 <= n_min <= n_max <= 4096.
[[nodiscard]] AppendixReport appendix_check(unsigned n_min, unsigned n_max);

/// The rows for a single n (no range guard beyond n >= 5).
[[nodiscard]] std::vector<AppendixRow> appendix_rows(unsigned n);

}  // namespace segsec::horace
