#include "segsec/horace/lemmas.hpp"

#include <algorithm>

#include "segsec/errors.hpp"

namespace segsec::horace {

namespace {

using fat::PointSpec;
using fat::SchemeSpec;
using fat::SpanEntry;
using fat::SubspaceSpec;

BigInt pow2(unsigned m) { return BigInt(1) << m; }

BigInt round_even(const BigInt& v) { return is_odd(v) ? v + 1 : v; }

void check_range(unsigned m, const BigInt& x, const BigInt& y) {
  if (m < 3) throw GuardViolation("m >= 3", "got m = " + std::to_string(m));
  if (x < 0 || x > (m - 1) / 2)
    throw GuardViolation("0 <= x <= floor((m-1)/2)", "got m = " + std::to_string(m) + ", x = " + str(x));
  if (y < 0) throw GuardViolation("y >= 0", "got y = " + str(y));
}

// floor((2^m - c) / (m+1)) for c <= 2^m, else -1.
BigInt floor_bound(unsigned m, const BigInt& c) {
  const BigInt num = pow2(m) - c;
  if (num < 0) return -1;
  return num / (m + 1);
}

std::optional<std::string> residue_direct(unsigned m, const BigInt& x, const BigInt& y) {
  if (x == 0 && y == 0) return "i";
  if (x == 1 && y == 0) return "ii";
  if (m == 4 && x == 1 && y == 1) return "v.1";
  if (m == 5 && x == 1 && y == 3) return "vi";
  if (!is_odd(x) && !is_odd(y) && x <= (m - 1) / 2 && y <= floor_bound(m, 2 * BigInt(m) * x)) return "vii";
  return std::nullopt;
}

std::optional<std::string> trace_direct(unsigned m, const BigInt& x, const BigInt& y) {
  if (x == 1 && y == 0) return "i";
  if (m < 4) return std::nullopt;
  if (m == 4 && x == 1 && y == 2) return "iv";
  if (m == 5 && x == 2 && y == 4) return "v";
  if (!is_odd(x) && !is_odd(y) && x <= (m - 1) / 2 && y <= floor_bound(m, 4 * x)) return "vi";
  return std::nullopt;
}

// The monotone case: a covered instance (x', y') >= (x, y). Candidates are the parity
// rounding used throughout the appendix plus the sporadic cases.
template <typename Direct>
std::optional<LemmaCase> monotone(unsigned m, const BigInt& x, const BigInt& y, const std::string& label,
                                  const std::vector<std::pair<BigInt, BigInt>>& sporadic, Direct direct) {
  std::vector<std::pair<BigInt, BigInt>> candidates{{round_even(x), round_even(y)}};
  candidates.insert(candidates.end(), sporadic.begin(), sporadic.end());
  for (const auto& [xp, yp] : candidates) {
    if (xp < x || yp < y || xp > (m - 1) / 2) continue;
    if (direct(m, xp, yp)) return LemmaCase{label, xp, yp};
  }
  return std::nullopt;
}

SubspaceSpec plane(unsigned i, bool component) {
  return SubspaceSpec{"H" + std::to_string(i),
                      {{SpanEntry::Kind::Coordinate, 2 * i, {}},
                       {SpanEntry::Kind::Coordinate, 2 * i + 1, {}},
                       {SpanEntry::Kind::Generic, 0, {}}},
                      component,
                      1};
}

SchemeSpec coordinate_base(unsigned m) {
  SchemeSpec spec;
  spec.ambient = m;
  spec.degree = m;
  for (unsigned i = 1; i <= m; ++i) spec.coordinate(i, m - 1);
  return spec;
}

LemmaReport evaluate(std::string lemma, const LemmaInstance& inst, std::optional<LemmaCase> covered,
                     const SchemeSpec& spec, BigInt formula, const la::SamplingConfig& cfg) {
  LemmaReport rep;
  rep.lemma = std::move(lemma);
  rep.instance = inst;
  rep.covered = std::move(covered);
  rep.value = fat::ideal_dim(spec, spec.degree, cfg).value;
  rep.formula = std::move(formula);
  rep.lower_bound_ok = BigInt(rep.value) >= rep.formula;
  return rep;
}

std::string describe(const LemmaInstance& inst) {
  return "m = " + std::to_string(inst.m) + ", x = " + std::to_string(inst.x) + ", y = " + std::to_string(inst.y);
}

}  // namespace

std::optional<LemmaCase> residue_case(unsigned m, const BigInt& x, const BigInt& y) {
  check_range(m, x, y);
  if (auto label = residue_direct(m, x, y)) return LemmaCase{*label, x, y};
  std::vector<std::pair<BigInt, BigInt>> sporadic{{1, 0}};
  if (m == 4) sporadic.emplace_back(1, 1);
  if (m == 5) sporadic.emplace_back(1, 3);
  return monotone(m, x, y, "iii", sporadic, residue_direct);
}

std::optional<LemmaCase> trace_case(unsigned m, const BigInt& x, const BigInt& y) {
  check_range(m, x, y);
  if (m == 3 && !(x == 1 && y == 0))
    throw GuardViolation("m >= 4", "only case (i) is stated for m = 3; got x = " + str(x) + ", y = " + str(y));
  if (auto label = trace_direct(m, x, y)) return LemmaCase{*label, x, y};
  std::vector<std::pair<BigInt, BigInt>> sporadic{{1, 0}};
  if (m == 4) sporadic.emplace_back(1, 2);
  if (m == 5) sporadic.emplace_back(2, 4);
  return monotone(m, x, y, "ii", sporadic, trace_direct);
}

BigInt residue_formula(unsigned m, const BigInt& x, const BigInt& y) {
  return pow2(m) - 2 * BigInt(m) * x - BigInt(m + 1) * y;
}

BigInt trace_formula(unsigned m, const BigInt& x, const BigInt& y) {
  return pow2(m) - 4 * x - BigInt(m + 1) * y;
}

SchemeSpec residue_lemma_spec(const LemmaInstance& inst) {
  SchemeSpec spec = coordinate_base(inst.m);
  for (unsigned i = 1; i <= inst.x; ++i) {
    spec.subspace(plane(i, false));
    spec.on_subspace("H" + std::to_string(i), 2, 2);
  }
  spec.generic(2, inst.y);
  return spec;
}

SchemeSpec trace_lemma_spec(const LemmaInstance& inst) {
  SchemeSpec spec = coordinate_base(inst.m);
  for (unsigned i = 1; i <= inst.x; ++i) spec.subspace(plane(i, true));
  spec.generic(2, inst.y);
  return spec;
}

SchemeSpec residue_v2_spec() {
  SchemeSpec spec = residue_lemma_spec({4, 1, 1});
  spec.subspace(SubspaceSpec{"H",
                             {{SpanEntry::Kind::Coordinate, 1, {}},
                              {SpanEntry::Kind::Coordinate, 4, {}},
                              {SpanEntry::Kind::Generic, 0, {}}},
                             false,
                             1});
  spec.on_subspace("H", 1, 2);
  return spec;
}

LemmaReport residue_lemma_eval(const LemmaInstance& inst, const la::SamplingConfig& cfg) {
  auto covered = residue_case(inst.m, inst.x, inst.y);
  return evaluate("residue", inst, std::move(covered), residue_lemma_spec(inst),
                  residue_formula(inst.m, inst.x, inst.y), cfg);
}

LemmaReport trace_lemma_eval(const LemmaInstance& inst, const la::SamplingConfig& cfg) {
  auto covered = trace_case(inst.m, inst.x, inst.y);
  return evaluate("trace", inst, std::move(covered), trace_lemma_spec(inst), trace_formula(inst.m, inst.x, inst.y),
                  cfg);
}

LemmaReport residue_lemma_check(const LemmaInstance& inst, const la::SamplingConfig& cfg) {
  if (!residue_case(inst.m, inst.x, inst.y))
    throw GuardViolation("residue lemma case (i)-(vii)", "no case covers " + describe(inst));
  return residue_lemma_eval(inst, cfg);
}

LemmaReport trace_lemma_check(const LemmaInstance& inst, const la::SamplingConfig& cfg) {
  if (!trace_case(inst.m, inst.x, inst.y))
    throw GuardViolation("trace lemma case (i)-(vi)", "no case covers " + describe(inst));
  return trace_lemma_eval(inst, cfg);
}

LemmaReport residue_lemma_v2_check(const la::SamplingConfig& cfg) {
  return evaluate("residue-v2", {4, 1, 1}, LemmaCase{"v.2", 1, 1}, residue_v2_spec(), 1, cfg);
}

FixedComponentReport fixed_component_check(unsigned i, unsigned m, unsigned n, const la::SamplingConfig& cfg) {
  if (n < 2) throw GuardViolation("n >= 2", "got n = " + std::to_string(n));
  if (i < 1 || i > n) throw GuardViolation("1 <= i <= n", "got i = " + std::to_string(i));
  if (m <= i) throw GuardViolation("m > i", "got m = " + std::to_string(m) + ", i = " + std::to_string(i));
  FixedComponentReport rep{i, m, n, i == n, 0, 0, 0, false};
  SchemeSpec x;
  x.ambient = n;
  x.degree = m + 1;
  for (unsigned j = 0; j <= i; ++j) x.coordinate(j, m);
  rep.dim = fat::ideal_dim(x, m + 1, cfg).value;
  if (rep.full) {
    rep.pass = rep.dim == 0;
    return rep;
  }
  auto with_h = [&](unsigned mult) {
    SchemeSpec y = x;
    SubspaceSpec h{"H", {}, true, mult};
    for (unsigned j = 0; j <= i; ++j) h.span.push_back({SpanEntry::Kind::Coordinate, j, {}});
    y.subspace(std::move(h));
    return fat::ideal_dim(y, m + 1, cfg).value;
  };
  rep.with_component = with_h(m - i);
  rep.with_extra = with_h(m - i + 1);
  rep.pass = rep.with_component == rep.dim && rep.with_extra < rep.dim;
  return rep;
}

SubstitutionReport substitution_check(const SchemeSpec& y, const std::vector<std::string>& planes,
                                      const la::SamplingConfig& cfg) {
  const unsigned m = y.ambient;
  if (m < 3) throw GuardViolation("m >= 3", "got m = " + std::to_string(m));
  for (const auto& id : planes) {
    const auto it = std::find_if(y.subspaces.begin(), y.subspaces.end(), [&](const SubspaceSpec& s) { return s.id == id; });
    if (it == y.subspaces.end() || it->span.size() != 3)
      throw GuardViolation("planes registered in Y", "'" + id + "' is not a plane of Y");
  }
  SchemeSpec doubles = y, pairs = y;
  for (const auto& id : planes) {
    doubles.on_subspace(id, 2, 1);
    pairs.on_subspace(id, 1, 2);
  }
  SubstitutionReport rep;
  rep.x = planes.size();
  rep.dim_y = fat::ideal_dim(y, m, cfg).value;
  rep.dim_double = fat::ideal_dim(doubles, m, cfg).value;
  rep.dim_pairs = fat::ideal_dim(pairs, m, cfg).value;
  rep.hypothesis = rep.dim_double + rep.x * (m + 1) == rep.dim_y;
  rep.conclusion = rep.dim_pairs + 2 * rep.x == rep.dim_y;
  return rep;
}

SubstitutionReport substitution_check(unsigned m, unsigned x, const la::SamplingConfig& cfg) {
  if (m < 3) throw GuardViolation("m >= 3", "got m = " + std::to_string(m));
  if (2 * x + 1 > m) throw GuardViolation("0 <= x <= floor((m-1)/2)", "got x = " + std::to_string(x));
  SchemeSpec y = coordinate_base(m);
  std::vector<std::string> ids;
  for (unsigned i = 1; i <= x; ++i) {
    y.subspace(plane(i, false));
    ids.push_back("H" + std::to_string(i));
  }
  return substitution_check(y, ids, cfg);
}

}  // namespace segsec::horace
