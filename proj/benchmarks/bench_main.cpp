#include <benchmark/benchmark.h>

#include "toriplan/algebra.hpp"
#include "toriplan/complex.hpp"
#include "toriplan/planner.hpp"
#include "toriplan/sampling.hpp"

using namespace toriplan;

static void BM_ZInvariantSkeleton(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SimplicialComplex x = SimplicialComplex::skeleton(n, n / 3);
  for (auto _ : state) benchmark::DoNotOptimize(z_invariant(x));
  state.counters["facets"] = static_cast<double>(x.maximal_faces().size());
}
BENCHMARK(BM_ZInvariantSkeleton)->DenseRange(6, 14, 4);

static void BM_ZclExhaustive(benchmark::State& state) {
  Rng rng = sample_rng(7, static_cast<std::uint64_t>(state.range(0)));
  const SimplicialComplex x = random_complex(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(zcl_exhaustive_basic(x));
}
BENCHMARK(BM_ZclExhaustive)->DenseRange(4, 10, 2);

static void BM_ShuffleExpansion(benchmark::State& state) {
  const int z = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shuffle_expansion(z));
}
BENCHMARK(BM_ShuffleExpansion)->DenseRange(4, 12, 4);

static void BM_PlanSafe(benchmark::State& state) {
  const SphereKind kind{state.range(0) ? Parity::kEven : Parity::kOdd, 1};
  const SimplicialComplex x = SimplicialComplex::skeleton(6, 2);
  const PairSampler sampler(x, kind);
  std::uint64_t i = 0;
  for (auto _ : state) {
    Rng rng = sample_rng(11, i++);
    const auto [a, b] = sampler.directed_pair(rng);
    benchmark::DoNotOptimize(plan_safe(x, a, b));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PlanSafe)->Arg(0)->Arg(1);
BENCHMARK_MAIN();
