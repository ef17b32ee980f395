#include "segsec/fat/conditions.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "segsec/errors.hpp"
#include "segsec/fat/monomials.hpp"
#include "segsec/la/rank.hpp"

namespace segsec::fat {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Falling factorials a!/(a-b)! mod p for a, b <= kMaxDegree.
class FallingFactorials {
 public:
  explicit FallingFactorials(const PrimeField& f) {
    for (unsigned a = 0; a <= kMaxDegree; ++a) {
      Elem acc = 1;
      for (unsigned b = 0; b <= a; ++b) {
        table_[a][b] = acc;
        acc = f.mul(acc, a - b);
      }
    }
  }
  [[nodiscard]] Elem operator()(unsigned a, unsigned b) const noexcept { return table_[a][b]; }

 private:
  Elem table_[kMaxDegree + 1][kMaxDegree + 1]{};
};

bool killed_by_coordinates(std::span<const std::uint8_t> a, unsigned t, const Scheme& x) {
  for (const auto& p : x.points())
    if (p.coordinate && a[*p.coordinate] + p.mult > t) return true;  // deg - a_i < m
  for (const auto& l : x.linears()) {
    if (!l.coordinate) continue;
    unsigned inside = 0;
    for (unsigned i : *l.coordinate) inside += a[i];
    if (t - inside < l.mult) return true;
  }
  return false;
}

void append_fat_point_rows(PrimeMatrix& out, const FatPoint& pt, const MonomialBasis& basis,
                           const std::vector<std::size_t>& cols, const FallingFactorials& ff) {
  const PrimeField& f = out.field();
  const unsigned vars = basis.vars(), t = basis.degree();
  std::vector<std::vector<Elem>> pw(vars, std::vector<Elem>(t + 1));
  for (unsigned j = 0; j < vars; ++j) {
    pw[j][0] = 1;
    for (unsigned e = 1; e <= t; ++e) pw[j][e] = f.mul(pw[j][e - 1], pt.coords[j]);
  }
  const MonomialBasis alphas(vars, pt.mult - 1);
  std::vector<Elem> row(cols.size());
  for (std::size_t r = 0; r < alphas.size(); ++r) {
    const auto alpha = alphas[r];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto a = basis[cols[c]];
      Elem v = 1;
      for (unsigned j = 0; j < vars && v != 0; ++j) {
        if (a[j] < alpha[j]) {
          v = 0;
          break;
        }
        v = f.mul(v, f.mul(ff(a[j], alpha[j]), pw[j][a[j] - alpha[j]]));
      }
      row[c] = v;
    }
    out.append_row(row);
  }
}

// Monomials z^γ in u-variables z_0..z_k and y-variables z_{k+1}..z_n of degree <= t whose
// y-degree is below ell, grouped by degree, with a successor table for multiplication.
class TruncatedMonomials {
 public:
  TruncatedMonomials(unsigned vars, unsigned uvars, unsigned ell, unsigned t) : vars_(vars) {
    std::map<std::vector<std::uint8_t>, std::uint32_t> index;
    std::vector<std::vector<std::uint8_t>> all;
    begin_.push_back(0);
    std::vector<std::vector<std::uint8_t>> level{std::vector<std::uint8_t>(vars, 0)};
    for (unsigned d = 0; d <= t; ++d) {
      for (auto& g : level) {
        index.emplace(g, static_cast<std::uint32_t>(all.size()));
        all.push_back(g);
      }
      begin_.push_back(all.size());
      if (d == t) break;
      // Next level: extend each monomial by one variable, keeping exponents nondecreasing
      // in the last variable touched so each monomial is generated once.
      std::vector<std::vector<std::uint8_t>> up;
      for (std::size_t i = begin_[d]; i < begin_[d + 1]; ++i) {
        const auto& g = all[i];
        unsigned last = 0;
        for (unsigned v = 0; v < vars; ++v)
          if (g[v] != 0) last = v;
        unsigned ydeg = 0;
        for (unsigned v = uvars; v < vars; ++v) ydeg += g[v];
        for (unsigned v = last; v < vars; ++v) {
          if (v >= uvars && ydeg + 1 >= ell) continue;
          auto h = g;
          ++h[v];
          up.push_back(std::move(h));
        }
      }
      level = std::move(up);
    }
    next_.assign(all.size() * vars, kNone);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (unsigned v = 0; v < vars; ++v) {
        auto h = all[i];
        ++h[v];
        const auto it = index.find(h);
        if (it != index.end()) next_[i * vars + v] = it->second;
      }
  }

  [[nodiscard]] std::size_t begin(unsigned d) const noexcept { return begin_[d]; }
  [[nodiscard]] std::size_t end(unsigned d) const noexcept { return begin_[d + 1]; }
  [[nodiscard]] std::size_t size() const noexcept { return begin_.back(); }
  [[nodiscard]] std::uint32_t next(std::size_t i, unsigned v) const noexcept { return next_[i * vars_ + v]; }

 private:
  unsigned vars_;
  std::vector<std::size_t> begin_;
  std::vector<std::uint32_t> next_;
};

void append_linear_rows(PrimeMatrix& out, const LinearComponent& lc, const MonomialBasis& basis,
                        const std::vector<std::size_t>& cols) {
  const PrimeField& f = out.field();
  const unsigned vars = basis.vars(), t = basis.degree();
  const unsigned uvars = static_cast<unsigned>(lc.span.rows());
  // Frame: x = sum_i z_i b_i with b_0..b_k the spanning points and the rest unit vectors
  // e_c for the non-pivot columns c of the span's echelon form.
  const auto ech = la::rref(lc.span);
  std::vector<bool> pivot(vars, false);
  for (auto c : ech.pivots) pivot[c] = true;
  // lin[j] = nonzero (z-variable, coefficient) pairs of x_j in the frame.
  std::vector<std::vector<std::pair<unsigned, Elem>>> lin(vars);
  for (unsigned i = 0; i < uvars; ++i)
    for (unsigned j = 0; j < vars; ++j)
      if (lc.span(i, j) != 0) lin[j].emplace_back(i, lc.span(i, j));
  unsigned z = uvars;
  for (unsigned c = 0; c < vars; ++c)
    if (!pivot[c]) lin[c].emplace_back(z++, 1);

  const TruncatedMonomials tm(vars, uvars, lc.mult, t);
  const std::size_t row0 = out.rows();
  const std::size_t nrows = tm.end(t) - tm.begin(t);
  for (std::size_t r = 0; r < nrows; ++r) out.append_row(std::vector<Elem>(out.cols(), 0));

  std::vector<Elem> cur(tm.size()), nxt(tm.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto a = basis[cols[c]];
    std::fill(cur.begin(), cur.end(), 0);
    cur[0] = 1;
    unsigned d = 0;
    for (unsigned j = 0; j < vars; ++j)
      for (unsigned rep = 0; rep < a[j]; ++rep, ++d) {
        std::fill(nxt.begin() + static_cast<std::ptrdiff_t>(tm.begin(d + 1)),
                  nxt.begin() + static_cast<std::ptrdiff_t>(tm.end(d + 1)), 0);
        for (std::size_t i = tm.begin(d); i < tm.end(d); ++i) {
          if (cur[i] == 0) continue;
          for (const auto& [v, w] : lin[j]) {
            const auto to = tm.next(i, v);
            if (to != kNone) nxt[to] = f.add(nxt[to], f.mul(cur[i], w));
          }
        }
        std::swap(cur, nxt);
      }
    for (std::size_t i = tm.begin(t); i < tm.end(t); ++i)
      if (cur[i] != 0) out.set(row0 + (i - tm.begin(t)), c, cur[i]);
  }
}

}  // namespace

std::size_t ConditionsSystem::ideal_dim() const { return columns - la::rank(matrix); }

std::size_t fat_point_rows(unsigned n, unsigned m) {
  return m == 0 ? 0 : static_cast<std::size_t>(binomial(std::uint64_t{n} + m - 1, n));
}

ConditionsSystem conditions(const Scheme& x, unsigned t, bool fast_path) {
  if (t < 1) throw GuardViolation("t >= 1", "degree must be positive");
  for (const auto& p : x.points())
    if (p.mult > t + 1)
      throw GuardViolation("m <= t+1", "fat point of multiplicity " + std::to_string(p.mult) +
                                           " in degree " + std::to_string(t));
  const unsigned n = x.ambient();
  const MonomialBasis basis(n + 1, t);
  std::vector<std::size_t> cols;
  cols.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!fast_path || !killed_by_coordinates(basis[i], t, x)) cols.push_back(i);

  ConditionsSystem sys{PrimeMatrix(x.field(), cols.size()), basis.size(), cols.size()};
  if (cols.empty()) return sys;
  const FallingFactorials ff(x.field());
  for (const auto& p : x.points())
    if (!fast_path || !p.coordinate) append_fat_point_rows(sys.matrix, p, basis, cols, ff);
  for (const auto& l : x.linears())
    if (!fast_path || !l.coordinate) append_linear_rows(sys.matrix, l, basis, cols);
  return sys;
}

PrimeMatrix conditions_matrix(const Scheme& x, unsigned t) { return conditions(x, t, false).matrix; }

std::size_t ideal_dim(const Scheme& x, unsigned t, bool fast_path) {
  return conditions(x, t, fast_path).ideal_dim();
}

}  // namespace segsec::fat
