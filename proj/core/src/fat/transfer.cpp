#include "segsec/fat/transfer.hpp"

#include <algorithm>

#include "segsec/errors.hpp"
#include "segsec/fat/conditions.hpp"
#include "segsec/la/rank.hpp"

namespace segsec::fat {

namespace {

bool in_chart(const segre::FactorPoint& pt) {
  return std::all_of(pt.pairs.begin(), pt.pairs.end(), [](const auto& pr) { return pr[0] != 0; });
}

}  // namespace

segre::FactorPoint chart_point(unsigned n, std::size_t k, const PrimeField& f, const la::Rng& rng) {
  auto pt = segre::sample_point(n, k, f, rng);
  for (std::uint64_t attempt = 1; !in_chart(pt); ++attempt) {
    la::Rng redraw = rng.split(k).split(attempt);
    pt = segre::random_factor_point(n, f, redraw);
  }
  return pt;
}

std::vector<Elem> chart_image(const segre::FactorPoint& pt, const PrimeField& f) {
  if (!in_chart(pt)) throw GuardViolation("chart", "a factor point has a_i = 0");
  std::vector<Elem> v(pt.n() + 1);
  v[0] = 1;
  for (unsigned i = 0; i < pt.n(); ++i) v[i + 1] = f.mul(pt.pairs[i][1], f.inv(pt.pairs[i][0]));
  return v;
}

Scheme transferred_scheme(const std::vector<segre::FactorPoint>& pts, const PrimeField& f) {
  const unsigned n = pts.empty() ? 0 : pts.front().n();
  Scheme x(f, n);
  for (unsigned i = 1; i <= n; ++i) x.add_coordinate_point(i, n - 1);
  for (const auto& pt : pts) x.add_point(chart_image(pt, f), 2);
  return x;
}

bool TransferReport::consistent() const noexcept {
  return !cells.empty() &&
         std::all_of(cells.begin(), cells.end(), [](const TransferCell& c) { return c.multigraded == c.fatpoint; });
}

TransferReport transfer_consistency(unsigned n, unsigned s, const la::SamplingConfig& cfg, bool fast_path) {
  segre::validate(segre::SecantProblem{n, s}, /*allow_empty=*/true);
  if (n < 2) throw GuardViolation("n >= 2", "the transfer needs at least two factors");
  la::validate(cfg);
  TransferReport rep{n, s, std::vector<TransferCell>(cfg.primes.size() * cfg.trials)};
  la::parallel_for(rep.cells.size(), [&](std::size_t idx) {
    const auto p = cfg.primes[idx / cfg.trials];
    const PrimeField f(p);
    const la::Rng rng = la::cell_rng(cfg.seed, p, idx % cfg.trials);
    std::vector<segre::FactorPoint> pts;
    PrimeMatrix stacked(f, std::size_t{1} << n);
    for (unsigned k = 0; k < s; ++k) {
      pts.push_back(chart_point(n, k, f, rng));
      stacked.append_rows(segre::tangent_rows(pts.back(), f));
    }
    Scheme w(f, n);
    if (s > 0) {
      w = transferred_scheme(pts, f);
    } else {
      for (unsigned i = 1; i <= n; ++i) w.add_coordinate_point(i, n - 1);
    }
    rep.cells[idx] = {p, idx % cfg.trials, (std::size_t{1} << n) - la::rank(stacked), ideal_dim(w, n, fast_path)};
  });
  return rep;
}

}  // namespace segsec::fat
