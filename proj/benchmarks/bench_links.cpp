#include <benchmark/benchmark.h>

#include "hypvol/augment.hpp"
#include "hypvol/link_bounds.hpp"
#include "hypvol/two_bridge.hpp"

namespace {

void BM_TwoBridgeDiagram(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hypvol::two_bridge_diagram(89, 55));
}
BENCHMARK(BM_TwoBridgeDiagram);

void BM_Augment(benchmark::State& state) {
  const hypvol::TwistReducedDiagram d = hypvol::two_bridge_diagram(89, 55);
  for (auto _ : state) benchmark::DoNotOptimize(hypvol::augment(d));
}
BENCHMARK(BM_Augment);

void BM_LinkReport(benchmark::State& state) {
  const hypvol::TwistReducedDiagram d = hypvol::two_bridge_diagram(55, 17);
  const hypvol::AugmentedPolyhedron P = hypvol::augment(d);
  hypvol::LinkFlags f;
  f.alternating = f.reduced = f.two_bridge = f.not_borromean = f.not_figure_eight = true;
  for (auto _ : state) benchmark::DoNotOptimize(hypvol::link_report(d.decomposition(), f, P.white_census));
}
BENCHMARK(BM_LinkReport);

}  // namespace
