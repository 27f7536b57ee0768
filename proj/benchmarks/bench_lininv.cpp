#include <benchmark/benchmark.h>

#include <random>

#include "lininv/config.hpp"
#include "lininv/invariants.hpp"
#include "lininv/primes.hpp"
#include "lininv/trig.hpp"
#include "lininv/weights.hpp"

using namespace lininv;

namespace {

AlphaVector random_integers(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 1L << 40);
  for (;;) {
    std::vector<mpq_class> v;
    for (std::size_t k = 0; k < m; ++k) v.emplace_back(dist(rng));
    AlphaVector a = AlphaVector::from_rationals(std::move(v));
    if (check_generic(a).generic) return a;
  }
}

void BM_SignedCount(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  Config cfg = config();
  cfg.threads = static_cast<std::size_t>(state.range(1));
  ScopedConfig scoped(cfg);
  const AlphaVector a = random_integers(m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(tally_solutions(a, PairSelection(1, 2)));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (m - 2)));
}
BENCHMARK(BM_SignedCount)->ArgsProduct({{12, 16, 20, 24}, {1, 4}})->UseRealTime()->Unit(benchmark::kMicrosecond);

void BM_SignedCountLog(benchmark::State& state) {
  const AlphaVector a = prime_alpha(static_cast<std::size_t>(state.range(0))).alpha;
  for (auto _ : state) benchmark::DoNotOptimize(signed_count(a, PairSelection(1, 2)));
}
BENCHMARK(BM_SignedCountLog)->DenseRange(5, 13, 4)->Unit(benchmark::kMicrosecond);

void BM_ClosedFormG(benchmark::State& state) {
  const AlphaVector a = random_integers(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_g(a));
}
BENCHMARK(BM_ClosedFormG)->DenseRange(9, 17, 4)->Unit(benchmark::kMicrosecond);

void BM_WeightSpace(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_weight_space(m));
}
BENCHMARK(BM_WeightSpace)->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);

void BM_MobiusSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mobius_sum(n, 1, 2));
}
BENCHMARK(BM_MobiusSum)->DenseRange(7, 15, 4)->Unit(benchmark::kMicrosecond);

void BM_IntegralOdd(benchmark::State& state) {
  const std::vector<std::int64_t> beta = approximate_beta(prime_alpha(7).alpha).beta;
  for (auto _ : state) benchmark::DoNotOptimize(formula_value(Formula::kResult, beta));
}
BENCHMARK(BM_IntegralOdd)->Unit(benchmark::kMicrosecond);

void BM_ApproximateBeta(benchmark::State& state) {
  const AlphaVector a = prime_alpha(static_cast<std::size_t>(state.range(0))).alpha;
  for (auto _ : state) benchmark::DoNotOptimize(approximate_beta(a));
}
BENCHMARK(BM_ApproximateBeta)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

void BM_Quadrature(benchmark::State& state) {
  const std::vector<std::int64_t> beta = {4, 6, 7, 9, 11};
  for (auto _ : state) benchmark::DoNotOptimize(quadrature_check(Formula::kResult, beta, 0, 1e-8));
}
BENCHMARK(BM_Quadrature)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
