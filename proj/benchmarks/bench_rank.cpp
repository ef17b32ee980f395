#include <benchmark/benchmark.h>

#include "segsec/fat/spec.hpp"
#include "segsec/horace/appendix.hpp"
#include "segsec/la/rank.hpp"
#include "segsec/segre/terracini.hpp"

namespace {

using namespace segsec;

void BM_TerraciniRank(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const la::PrimeField f(la::kDefaultPrimes[0]);
  const la::Rng rng(la::kDefaultSeed);
  const unsigned s = static_cast<unsigned>(((1u << n) + n) / (n + 1) + 1);
  const auto m = segre::terracini_matrix(n, s, f, rng);
  for (auto _ : state) benchmark::DoNotOptimize(la::rank(m));
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["cols"] = static_cast<double>(m.cols());
}
BENCHMARK(BM_TerraciniRank)->DenseRange(6, 11)->Unit(benchmark::kMillisecond);

void BM_RankProfile(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const la::PrimeField f(la::kDefaultPrimes[0]);
  const la::Rng rng(la::kDefaultSeed);
  const auto m = segre::terracini_matrix(n, static_cast<unsigned>((1u << n) / (n + 1) + 2), f, rng);
  for (auto _ : state) benchmark::DoNotOptimize(la::rank_profile(m));
}
BENCHMARK(BM_RankProfile)->DenseRange(6, 10)->Unit(benchmark::kMillisecond);

void BM_FatPointIdealDim(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto spec = fat::segre_to_fatpoints(n, static_cast<unsigned>(((1u << n) + n) / (n + 1)));
  la::SamplingConfig cfg;
  cfg.primes.resize(1);
  cfg.trials = 1;
  for (auto _ : state) benchmark::DoNotOptimize(fat::ideal_dim(spec, n, cfg).value);
}
BENCHMARK(BM_FatPointIdealDim)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_AppendixSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(horace::appendix_check(5, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_AppendixSweep)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
