#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "segsec/fat/spec.hpp"
#include "segsec/horace/profile.hpp"
#include "segsec/la/multi_prime.hpp"

namespace segsec::horace {

/// Parameters of the Residue and Trace Lemma schemes in P^m.
struct LemmaInstance {
  unsigned m = 3;
  unsigned x = 0;
  unsigned y = 0;
  bool operator==(const LemmaInstance&) const = default;
};

/// Which statement of a lemma gives the equality for (m, x, y), and, for the monotone
/// case, the larger instance (x', y') it is derived from.
struct LemmaCase {
  std::string label;  // "i", "ii", "v.1", "vi", "vii", "iii" (residue); "i", "iv", "v", "vi", "ii" (trace)
  BigInt x_prime;
  BigInt y_prime;
};

/// Pure arithmetic, so it runs at any m. Throws GuardViolation when (m, x, y) is outside the
/// lemma's range (m >= 3, 0 <= x <= floor((m-1)/2)); returns nullopt when no case applies.
[[nodiscard]] std::optional<LemmaCase> residue_case(unsigned m, const BigInt& x, const BigInt& y);
/// Same for the Trace Lemma; m = 3 is admitted only for case (i).
[[nodiscard]] std::optional<LemmaCase> trace_case(unsigned m, const BigInt& x, const BigInt& y);

/// 2^m - 2mx - (m+1)y and 2^m - 4x - (m+1)y.
[[nodiscard]] BigInt residue_formula(unsigned m, const BigInt& x, const BigInt& y);
[[nodiscard]] BigInt trace_formula(unsigned m, const BigInt& x, const BigInt& y);

/// (m-1)Q_1 + ... + (m-1)Q_m + J2(H_1) + ... + J2(H_x) + 2R_1 + ... + 2R_y, degree m.
/// Q_i = e_i; H_i is spanned by Q_{2i}, Q_{2i+1} and a generic point; J2(H_i) is two generic
/// double points on H_i.
[[nodiscard]] fat::SchemeSpec residue_lemma_spec(const LemmaInstance& inst);
/// Same, with the planes H_i themselves as reduced components and no points on them.
[[nodiscard]] fat::SchemeSpec trace_lemma_spec(const LemmaInstance& inst);
/// residue_lemma_spec(4, 1, 1) plus two generic simple points on a generic plane through Q_1, Q_4.
[[nodiscard]] fat::SchemeSpec residue_v2_spec();

struct LemmaReport {
  std::string lemma;                // "residue", "trace", "residue-v2"
  LemmaInstance instance;
  std::optional<LemmaCase> covered;  // nullopt: only the lower bound is asserted
  std::size_t value = 0;             // sampled dim (I_X)_m
  BigInt formula;                    // the lemma's count
  bool lower_bound_ok = false;       // value >= formula
  [[nodiscard]] bool pass() const { return lower_bound_ok && (!covered || BigInt(value) == formula); }
};

/// Evaluates any in-range instance: equality is asserted where a case applies, the lower
/// bound always.
[[nodiscard]] LemmaReport residue_lemma_eval(const LemmaInstance& inst, const la::SamplingConfig& cfg);
[[nodiscard]] LemmaReport trace_lemma_eval(const LemmaInstance& inst, const la::SamplingConfig& cfg);

/// Like the _eval forms, but an instance no case covers is a GuardViolation naming the guard.
[[nodiscard]] LemmaReport residue_lemma_check(const LemmaInstance& inst, const la::SamplingConfig& cfg);
[[nodiscard]] LemmaReport trace_lemma_check(const LemmaInstance& inst, const la::SamplingConfig& cfg);

/// The (v.2) instance; the lemma's count is 1.
[[nodiscard]] LemmaReport residue_lemma_v2_check(const la::SamplingConfig& cfg);

struct FixedComponentReport {
  unsigned i = 0, m = 0, n = 0;
  bool full = false;                   // i == n branch
  std::size_t dim = 0;                 // dim (I_X)_{m+1}
  std::size_t with_component = 0;      // X + (m-i)H   (i < n)
  std::size_t with_extra = 0;          // X + (m-i+1)H (i < n); strictly smaller
  bool pass = false;
};

/// X = mQ_1 + ... + mQ_{i+1} with Q_j = e_{j-1}, H = <Q_1..Q_{i+1}>, degree m+1.
/// i = n: (I_X)_{m+1} = 0. i < n: H is fixed with multiplicity exactly m - i.
[[nodiscard]] FixedComponentReport fixed_component_check(unsigned i, unsigned m, unsigned n,
                                                         const la::SamplingConfig& cfg);

struct SubstitutionReport {
  std::size_t x = 0;
  std::size_t dim_y = 0;
  std::size_t dim_double = 0;  // Y + 2R_i, R_i a generic point of H_i
  std::size_t dim_pairs = 0;   // Y + two generic simple points on each H_i
  bool hypothesis = false;     // dim_double = dim_y - x(m+1)
  bool conclusion = false;     // dim_pairs = dim_y - 2x
  [[nodiscard]] bool pass() const { return !hypothesis || conclusion; }
};

/// `planes` are ids of plane subspaces registered in y (ambient m = y.ambient, degree m).
[[nodiscard]] SubstitutionReport substitution_check(const fat::SchemeSpec& y, const std::vector<std::string>& planes,
                                                    const la::SamplingConfig& cfg);
/// Y = (m-1)Q_1 + ... + (m-1)Q_m with planes H_i through Q_{2i}, Q_{2i+1}, i = 1..x.
[[nodiscard]] SubstitutionReport substitution_check(unsigned m, unsigned x, const la::SamplingConfig& cfg);

}  // namespace segsec::horace
