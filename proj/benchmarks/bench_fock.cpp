#include <benchmark/benchmark.h>

#include "ellwall/fock.hpp"

using namespace ellwall;

static void BM_VertexMode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VertexField y(2, n);
    benchmark::DoNotOptimize(y.mode(1));
  }
}
BENCHMARK(BM_VertexMode)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_Supercommutator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  OperatorExpr y = VertexField(1, n).mode(0);
  OperatorExpr x = OperatorExpr::mode(-2, Label::Pt, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(supercommutator(x, y));
}
BENCHMARK(BM_Supercommutator)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_BracketPair(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(bracket_pair({1, 1, Label::SigmaPlus}, {-1, 0, Label::SigmaMinus}, 6));
}
BENCHMARK(BM_BracketPair)->Unit(benchmark::kMillisecond);

static void BM_MonodromyS(benchmark::State& state) {
  FockState s = FockState::from_modes(0, {{3, Label::E}, {2, Label::E}, {1, Label::E}});
  for (auto _ : state) benchmark::DoNotOptimize(monodromy_s(s, 6));
}
BENCHMARK(BM_MonodromyS)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
