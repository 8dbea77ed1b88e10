#include <benchmark/benchmark.h>

#include "ellwall/local_model.hpp"

using namespace ellwall;

static BimoduleParam sample(int k) {
  BimoduleParam p = BimoduleParam::zero(k);
  for (int g = 0; g < k; ++g) p.a[g] = Cyclotomic::zeta_power(k, g) + Cyclotomic(k, rat(g, 3));
  return p;
}

static void BM_CharValues(benchmark::State& state) {
  auto p = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_values(p));
}
BENCHMARK(BM_CharValues)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

static void BM_JordanType(benchmark::State& state) {
  auto p = sample(6);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nilpotent_jordan_type(y_matrix(n, p)));
}
BENCHMARK(BM_JordanType)->DenseRange(1, 7, 2);

BENCHMARK_MAIN();
