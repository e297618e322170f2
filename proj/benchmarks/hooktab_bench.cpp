#include <benchmark/benchmark.h>

#include "hooktab/extraction.hpp"
#include "hooktab/hook_shape.hpp"
#include "hooktab/hook_tableau.hpp"
#include "hooktab/superspace.hpp"
#include "hooktab/taquin.hpp"

using namespace hooktab;

// A 5-box hook shape in sl(2,2); small enough that every benchmark here
// finishes in well under a second per iteration batch.
static HookShape bench_shape() { return HookShape(2, 2, {0, 2}, {1}); }

static void BM_EnumerateSemistandard(benchmark::State& state) {
  HookShape lam = bench_shape();
  for (auto _ : state) {
    auto all = enumerate_semistandard(lam);
    benchmark::DoNotOptimize(all);
  }
  state.SetLabel("EnumerateSemistandard");
}

static void BM_Push(benchmark::State& state) {
  auto inventory = enumerate_semistandard(bench_shape());
  for (auto _ : state) {
    for (const auto& t : inventory) {
      auto pushed = push(t);
      benchmark::DoNotOptimize(pushed);
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long long>(inventory.size()));
  state.SetLabel("Push");
}

static void BM_Maxjdt(benchmark::State& state) {
  auto inventory = enumerate_semistandard(bench_shape());
  for (auto _ : state) {
    for (const auto& t : inventory) {
      SkewTableau skew =
          SkewTableau::from_tableau(t, largest_extractable_pair(t));
      auto r = maxjdt(skew);
      benchmark::DoNotOptimize(r);
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long long>(inventory.size()));
  state.SetLabel("Maxjdt");
}

static void BM_YoungVector(benchmark::State& state) {
  HookTableau t = trivial_tableau(bench_shape());
  for (auto _ : state) {
    SuperTensor v = young_vector(t);
    benchmark::DoNotOptimize(v);
  }
  state.SetLabel("YoungVector");
}

static void BM_Straighten(benchmark::State& state) {
  // A non-semistandard 3-box filling; the solver for its shape is cached
  // once, so steady state measures the decomposition alone.
  HookShape lam(1, 2, {2}, {1});
  HookTableau w(lam, {{3, 2}}, {{3}});
  SolverCache cache;
  TensorBudget budget;
  straighten(w, cache, budget);
  for (auto _ : state) {
    FormalCombination c = straighten(w, cache, budget);
    benchmark::DoNotOptimize(c);
  }
  state.SetLabel("Straighten");
}

BENCHMARK(BM_EnumerateSemistandard);
BENCHMARK(BM_Push);
BENCHMARK(BM_Maxjdt);
BENCHMARK(BM_YoungVector);
BENCHMARK(BM_Straighten);

BENCHMARK_MAIN();
