#include "segsec/horace/appendix.hpp"

#include <algorithm>

#include "segsec/errors.hpp"
#include "segsec/horace/lemmas.hpp"
#include "segsec/la/multi_prime.hpp"

namespace segsec::horace {

namespace {

struct Rows {
  unsigned n;
  std::string branch;
  std::vector<AppendixRow>& out;

  void add(std::string label, bool holds, std::string detail = {}) {
    out.push_back({n, branch, std::move(label), std::move(detail), holds});
  }
  void le(std::string label, const BigInt& lhs, const BigInt& rhs) {
    add(std::move(label), lhs <= rhs, str(lhs) + " <= " + str(rhs));
  }
  void eq(std::string label, const BigInt& lhs, const BigInt& rhs) {
    add(std::move(label), lhs == rhs, str(lhs) + " = " + str(rhs));
  }
};

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

template <typename CaseFn>
void case_row(Rows& rows, const std::string& label, CaseFn fn, unsigned m, const BigInt& x, const BigInt& y,
              const std::optional<std::string>& required = std::nullopt) {
  std::optional<LemmaCase> c;
  std::string why;
  try {
    c = fn(m, x, y);
  } catch (const GuardViolation& g) {
    why = g.what();
  }
  const std::string params = "m=" + std::to_string(m) + ", x=" + str(x) + ", y=" + str(y);
  if (!c) {
    rows.add(label, false, params + (why.empty() ? ": no case applies" : ": " + why));
    return;
  }
  const bool ok = !required || c->label == *required;
  rows.add(label, ok, params + ": case (" + c->label + ")" +
                          (c->x_prime != x || c->y_prime != y ? " via x'=" + str(c->x_prime) + ", y'=" + str(c->y_prime) : ""));
}

void branch_rows(const ParameterProfile& p, bool lower, std::vector<AppendixRow>& out) {
  const unsigned n = p.n, m = n - 1;
  const BigInt s = lower ? p.e : p.e_star;
  const BigInt ts = lower ? *p.t : *p.t_star;
  const std::string tn = lower ? "t" : "t*";
  Rows rows{n, lower ? "e" : "e*", out};
  const BigInt q = p.q, r = p.r, N = n, M = m;
  const BigInt x = q;
  const BigInt yw = ts + 1 - 2 * q;
  const BigInt yt = ts;
  const BigInt p2m = BigInt(1) << m;

  rows.le("2q+1 <= n", 2 * q + 1, N);
  rows.le("2q+" + tn + " <= s", 2 * q + ts, s);
  rows.le("0 <= y = " + tn + "+1-2q", 0, yw);

  // W' through the Residue Lemma.
  std::optional<std::string> w_required, t_required;
  if (lower && n == 5) w_required = "v.1";
  if (lower && n == 6) w_required = "vi";
  if (lower && n == 9) w_required = "vii";
  if (!lower && n == 8) w_required = "iii";
  if (lower && n == 5) t_required = "iv";
  if (lower && n == 6) t_required = "ii";
  if (!lower && n == 8) t_required = "vi";
  case_row(rows, "residue lemma covers W'", residue_case, m, x, yw, w_required);
  case_row(rows, "trace lemma covers T'", trace_case, m, x, yt, t_required);

  if (lower && n == 9) {
    rows.eq("n=9: x = 2", x, 2);
    rows.eq("n=9: y = 22", yw, 22);
    rows.eq("n=9: floor((2^m-2mx)/(m+1)) = 24", (p2m - 2 * M * x) / (M + 1), 24);
  }
  if (!lower && n == 8) {
    rows.eq("n=8: y = 11", yw, 11);
    rows.eq("n=8: floor((2^m-2mx)/(m+1)) = 12", (p2m - 2 * M * x) / (M + 1), 12);
    rows.eq("n=8: trace y = 14", yt, 14);
    rows.eq("n=8: floor((2^m-4x)/(m+1)) = 15", (p2m - 4 * x) / (M + 1), 15);
  }
  if (n >= 10) {
    rows.le("x+1 <= floor((m-1)/2)", x + 1, (M - 1) / 2);
    rows.le("y+1 <= floor((2^m-2m(x+1))/(m+1))", yw + 1, floor_div(p2m - 2 * M * (x + 1), M + 1));
    // The reductions used to prove the previous row.
    rows.le(lower ? "(6n-1)(n+1) <= 2^n" : "6n(n+1) <= 2^n", lower ? (6 * N - 1) * (N + 1) : 6 * N * (N + 1), p.pow2);
  }
  if ((lower && n >= 9) || (!lower && n >= 10)) {
    rows.le("trace y+1 <= floor((2^m-4(x+1))/(m+1))", yt + 1, floor_div(p2m - 4 * (x + 1), M + 1));
    rows.le(lower ? "(3n+8)(n+1) <= 2^n" : "4(n+2)(n+1) <= 2^n", lower ? (3 * N + 8) * (N + 1) : 4 * (N + 2) * (N + 1),
            p.pow2);
  }

  const BigInt w_prime = residue_formula(m, x, yw);
  const BigInt t_prime = trace_formula(m, x, yt);
  if (lower) {
    rows.eq("W' - t = (k - r + 1)/2", 2 * (w_prime - ts), p.k - r + 1);
    rows.le("0 <= W' - t", 0, w_prime - ts);
    // The derivation gives half of k + r - 1; only the sign is used.
    rows.eq("T' - (t+1-2q) = (k + r - 1)/2", 2 * (t_prime - yw), p.k + r - 1);
    rows.le("0 <= k + r - 1", 0, p.k + r - 1);
    rows.le("0 <= T' - (t+1-2q)", 0, t_prime - yw);
    rows.eq("W + T = 2^n - (n+1)e", (w_prime - ts) + (t_prime - yw), p.pow2 - (N + 1) * s);
  } else {
    rows.eq("W' - t* = (k - r - n)/2", 2 * (w_prime - ts), p.k - r - N);
    rows.le("W' - t* <= 0", w_prime - ts, 0);
    rows.eq("T' - (t*+1-2q) = (k - n + r - 2)/2", 2 * (t_prime - yw), p.k - N + r - 2);
    rows.le("T' - (t*+1-2q) <= 0", t_prime - yw, 0);
    rows.eq("W + T = 0", std::max(BigInt(0), w_prime - ts) + std::max(BigInt(0), t_prime - yw), 0);
  }
}

// Bounds the Residue and Trace Lemma proofs use, at m = n - 1 where they apply.
void polynomial_rows(unsigned n, std::vector<AppendixRow>& out) {
  const unsigned m = n - 1;
  const BigInt M = m;
  const BigInt lhs = BigInt(1) << (m + 1);
  Rows rows{n, "n", out};
  if (m >= 10) {
    rows.le("m^3+4m^2+m+2 <= 2^(m+1)", M * M * M + 4 * M * M + M + 2, lhs);
    rows.le("(m-1)(m^2+9m+6) <= 2^(m+1)", (M - 1) * (M * M + 9 * M + 6), lhs);
  }
  if (m >= 7) rows.le("4m^2+8m-4 <= 2^(m+1)", 4 * M * M + 8 * M - 4, lhs);
  if (m >= 8) rows.le("4m^2+24m+12 <= 2^(m+1)", 4 * M * M + 24 * M + 12, lhs);
}

}  // namespace

std::optional<AppendixRow> AppendixReport::first_violation() const {
  const auto it = std::find_if(rows.begin(), rows.end(), [](const AppendixRow& r) { return !r.holds; });
  if (it == rows.end()) return std::nullopt;
  return *it;
}

std::vector<AppendixRow> appendix_rows(unsigned n) {
  if (n < 5) throw GuardViolation("n >= 5", "got n = " + std::to_string(n));
  std::vector<AppendixRow> out;
  const ParameterProfile p = make_profile(n);
  if (auto bad = profile_violation(p)) out.push_back({n, "n", "profile: " + *bad, "", false});
  if (p.t && !p.divisible) branch_rows(p, true, out);
  if (p.t_star && !p.divisible) branch_rows(p, false, out);
  polynomial_rows(n, out);
  return out;
}

AppendixReport appendix_check(unsigned n_min, unsigned n_max) {
  if (n_min < 5 || n_min > n_max || n_max > 4096)
    throw GuardViolation("5 <= n_min <= n_max <= 4096",
                         "got n_min = " + std::to_string(n_min) + ", n_max = " + std::to_string(n_max));
  AppendixReport rep{n_min, n_max, {}, 0};
  std::vector<std::vector<AppendixRow>> per_n(n_max - n_min + 1);
  la::parallel_for(per_n.size(), [&](std::size_t i) { per_n[i] = appendix_rows(n_min + static_cast<unsigned>(i)); });
  for (auto& v : per_n) rep.rows.insert(rep.rows.end(), v.begin(), v.end());
  rep.violations = static_cast<std::size_t>(
      std::count_if(rep.rows.begin(), rep.rows.end(), [](const AppendixRow& r) { return !r.holds; }));
  return rep;
}

}  // namespace segsec::horace
