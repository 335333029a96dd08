#include <benchmark/benchmark.h>

#include <cmath>

#include "hypvol/lobachevsky.hpp"

namespace {

void BM_Lobachevsky(benchmark::State& state) {
  double theta = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypvol::lobachevsky(theta));
    theta += 0.37;
    if (theta > 10) theta -= 10;
  }
}
BENCHMARK(BM_Lobachevsky);

void BM_AntiprismVolume(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hypvol::antiprism_volume(n));
}
BENCHMARK(BM_AntiprismVolume)->Arg(4)->Arg(100)->Arg(10000);

}  // namespace
