#include <benchmark/benchmark.h>

#include "hypvol/families.hpp"
#include "hypvol/map_ops.hpp"
#include "hypvol/poly_bounds.hpp"

namespace {

void BM_Medial(benchmark::State& state) {
  const hypvol::CombinatorialMap m = hypvol::prism(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hypvol::medial(m));
}
BENCHMARK(BM_Medial)->Arg(8)->Arg(64)->Arg(512);

void BM_Isomorphism(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hypvol::CombinatorialMap a = hypvol::medial(hypvol::two_apex_pyramid(n));
  const hypvol::CombinatorialMap b = hypvol::twisted_antiprism(n);
  for (auto _ : state) benchmark::DoNotOptimize(hypvol::maps_isomorphic(a, b));
}
BENCHMARK(BM_Isomorphism)->Arg(8)->Arg(32)->Arg(128);

void BM_RectificationReport(benchmark::State& state) {
  const hypvol::CombinatorialMap m = hypvol::prism(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hypvol::rectification_bounds(m));
}
BENCHMARK(BM_RectificationReport)->Arg(9)->Arg(64);

}  // namespace
