#include <benchmark/benchmark.h>

#include "ellwall/walls.hpp"

using namespace ellwall;

static void BM_ChamberDecompositionAm1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chamber_decomposition(state.range(0), CartanType::Am1));
}
BENCHMARK(BM_ChamberDecompositionAm1)->RangeMultiplier(2)->Range(4, 64);

static void BM_WallsD4(benchmark::State& state) {
  auto v = MukaiVector::hilbert(BilinearLattice::ns_lattice(CartanType::D4).rank(), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_v_walls(v, CartanType::D4));
}
BENCHMARK(BM_WallsD4)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Svg(benchmark::State& state) {
  auto dec = chamber_decomposition(12, CartanType::Am1);
  for (auto _ : state) benchmark::DoNotOptimize(emit_chamber_svg(dec));
}
BENCHMARK(BM_Svg);

BENCHMARK_MAIN();
