#include "segsec/segre/terracini.hpp"

#include <algorithm>
#include <string>

#include "segsec/errors.hpp"
#include "segsec/la/rank.hpp"

namespace segsec::segre {

void validate(const SecantProblem& p, bool allow_empty) {
  if (p.n < 1) throw GuardViolation("n >= 1", "got n = " + std::to_string(p.n));
  if (p.n > kMaxMatrixFactors)
    throw ResourceLimit("n = " + std::to_string(p.n) + " exceeds the matrix limit n <= " +
                        std::to_string(kMaxMatrixFactors));
  if (!allow_empty && p.s < 1) throw GuardViolation("s >= 1", "got s = 0");
}

std::uint64_t expected_dim(unsigned n, std::uint64_t s) {
  if (n < 1) throw GuardViolation("n >= 1", "got n = " + std::to_string(n));
  if (n > 62) throw GuardViolation("n <= 62", "2^n - 1 overflows; got n = " + std::to_string(n));
  if (s < 1) throw GuardViolation("s >= 1", "got s = 0");
  const std::uint64_t big_n = (std::uint64_t{1} << n) - 1;
  // s > N / (n+1) already forces s(n+1) - 1 >= N; checking first avoids overflow.
  if (s > big_n / (n + 1)) return big_n;
  return std::min(big_n, s * (n + 1) - 1);
}

FactorPoint random_factor_point(unsigned n, const PrimeField& f, Rng& rng) {
  FactorPoint pt;
  pt.pairs.resize(n);
  for (auto& pr : pt.pairs) {
    do {
      pr = {rng.uniform(f), rng.uniform(f)};
    } while (pr[0] == 0 && pr[1] == 0);
  }
  return pt;
}

std::vector<Elem> segre_coordinates(const FactorPoint& pt, const PrimeField& f) {
  std::vector<Elem> v(std::size_t{1} << pt.n());
  v[0] = 1;
  std::size_t len = 1;
  for (const auto& [a, b] : pt.pairs) {
    for (std::size_t j = 0; j < len; ++j) {
      v[len + j] = f.mul(v[j], b);
      v[j] = f.mul(v[j], a);
    }
    len *= 2;
  }
  return v;
}

std::array<Elem, 2> tangent_direction(const std::array<Elem, 2>& pair) noexcept {
  return pair[0] != 0 ? std::array<Elem, 2>{0, 1} : std::array<Elem, 2>{1, 0};
}

PrimeMatrix tangent_rows(const FactorPoint& pt, const PrimeField& f) {
  PrimeMatrix m(f, std::size_t{1} << pt.n());
  m.reserve_rows(pt.n() + 1);
  m.append_row(segre_coordinates(pt, f));
  for (unsigned i = 0; i < pt.n(); ++i) {
    FactorPoint moved = pt;
    moved.pairs[i] = tangent_direction(pt.pairs[i]);
    m.append_row(segre_coordinates(moved, f));
  }
  return m;
}

FactorPoint sample_point(unsigned n, std::size_t k, const PrimeField& f, const Rng& rng) {
  Rng sub = rng.split(k);
  return random_factor_point(n, f, sub);
}

PrimeMatrix terracini_matrix(unsigned n, unsigned s, const PrimeField& f, const Rng& rng) {
  PrimeMatrix m(f, std::size_t{1} << n);
  m.reserve_rows(std::size_t{s} * (n + 1));
  for (unsigned k = 0; k < s; ++k) m.append_rows(tangent_rows(sample_point(n, k, f, rng), f));
  return m;
}

namespace {

DimensionReport make_report(const SecantProblem& problem, const SamplingConfig& cfg,
                            std::vector<std::uint64_t> cell_ranks) {
  DimensionReport rep;
  rep.problem = problem;
  rep.expected = expected_dim(problem.n, problem.s);
  rep.primes = cfg.primes;
  rep.trials = cfg.trials;
  rep.seed = cfg.seed.value;
  std::uint64_t best = 0;
  for (auto r : cell_ranks) best = std::max(best, r);
  for (auto r : cell_ranks) rep.cell_dims.push_back(r == 0 ? 0 : r - 1);
  rep.observed = best - 1;
  rep.defect = rep.expected - rep.observed;
  rep.ideal_dim = (std::uint64_t{1} << problem.n) - best;
  rep.cells_agreeing = static_cast<std::size_t>(
      std::count(rep.cell_dims.begin(), rep.cell_dims.end(), rep.observed));
  // A nonvanishing r x r minor of the stacked rows has degree at most r*n in the coordinates.
  rep.degree_bound = best * problem.n;
  const auto pmin = *std::min_element(cfg.primes.begin(), cfg.primes.end());
  rep.failure_bound = static_cast<double>(rep.degree_bound) / static_cast<double>(pmin);
  return rep;
}

}  // namespace

std::vector<DimensionReport> secant_dim_profile(unsigned n, unsigned s_max, const SamplingConfig& cfg) {
  validate(SecantProblem{n, s_max});
  la::validate(cfg);
  const std::size_t cells = cfg.primes.size() * cfg.trials;
  std::vector<std::vector<std::size_t>> profiles(cells);
  la::parallel_for(cells, [&](std::size_t idx) {
    const std::uint64_t p = cfg.primes[idx / cfg.trials];
    const PrimeField f(p);
    const Rng rng = la::cell_rng(cfg.seed, p, idx % cfg.trials);
    profiles[idx] = la::rank_profile(terracini_matrix(n, s_max, f, rng));
  });
  std::vector<DimensionReport> out;
  out.reserve(s_max);
  for (unsigned s = 1; s <= s_max; ++s) {
    std::vector<std::uint64_t> ranks;
    ranks.reserve(cells);
    for (const auto& prof : profiles) ranks.push_back(prof[std::size_t{s} * (n + 1) - 1]);
    out.push_back(make_report(SecantProblem{n, s}, cfg, std::move(ranks)));
  }
  return out;
}

DimensionReport secant_dim_sample(const SecantProblem& problem, const SamplingConfig& cfg) {
  validate(problem);
  const auto res = la::multi_prime_rank(
      [&](const PrimeField& f, Rng& rng) { return terracini_matrix(problem.n, problem.s, f, rng); }, cfg);
  std::vector<std::uint64_t> ranks;
  for (const auto& c : res.cells) ranks.push_back(c.rank);
  return make_report(problem, cfg, std::move(ranks));
}

std::uint64_t multigraded_ideal_dim(const SecantProblem& problem, const SamplingConfig& cfg) {
  validate(problem, /*allow_empty=*/true);
  if (problem.s == 0) return std::uint64_t{1} << problem.n;
  return secant_dim_sample(problem, cfg).ideal_dim;
}

}  // namespace segsec::segre
