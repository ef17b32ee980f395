#include "segsec/la/multi_prime.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "segsec/errors.hpp"
#include "segsec/la/rank.hpp"

namespace segsec::la {

void validate(const SamplingConfig& cfg) {
  if (cfg.primes.empty()) throw GuardViolation("primes", "at least one prime is required");
  if (cfg.trials == 0) throw GuardViolation("trials", "trials must be >= 1");
  for (auto p : cfg.primes) (void)PrimeField(p);
}

Rng cell_rng(Seed seed, std::uint64_t prime, std::size_t trial) noexcept {
  return Rng(seed).split(prime).split(trial);
}

MultiRankResult multi_prime_rank(const MatrixBuilder& build, const SamplingConfig& cfg,
                                 std::uint64_t degree_bound) {
  validate(cfg);
  MultiRankResult out;
  out.degree_bound = degree_bound;
  out.cells.resize(cfg.primes.size() * cfg.trials);
  parallel_for(out.cells.size(), [&](std::size_t idx) {
    const std::uint64_t p = cfg.primes[idx / cfg.trials];
    const std::size_t trial = idx % cfg.trials;
    const PrimeField f(p);
    Rng rng = cell_rng(cfg.seed, p, trial);
    out.cells[idx] = {p, trial, la::rank(build(f, rng))};
  });
  for (const auto& c : out.cells) out.rank = std::max(out.rank, c.rank);
  const auto pmin = *std::min_element(cfg.primes.begin(), cfg.primes.end());
  out.failure_bound = static_cast<double>(degree_bound) / static_cast<double>(pmin);
  return out;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            const std::lock_guard lock(error_mu);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace segsec::la
