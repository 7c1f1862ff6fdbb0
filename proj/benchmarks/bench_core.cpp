#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "lwf/frames.hpp"
#include "lwf/geometry.hpp"
#include "lwf/quadrature.hpp"
#include "lwf/transforms.hpp"

namespace {

void BM_GaussLaguerreRule(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lwf::quad::gauss_laguerre_rule(m, 1.5));
  state.SetComplexityN(m);
}
BENCHMARK(BM_GaussLaguerreRule)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_AtomBasisPairings(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const lwf::transforms::WaveletOrder o{1, 2.0};
  const auto rule = lwf::transforms::pairing_rule(o, 2.0, M);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lwf::transforms::atom_basis_pairings(o, 2.0, M, {x, 0.7}, rule));
    x += 1e-3;
  }
  state.SetComplexityN(M);
}
BENCHMARK(BM_AtomBasisPairings)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_FullRowOperator(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(lwf::frames::full_row_operator({0, 2.0}, 2.0, M, 0.5, 1.3));
}
BENCHMARK(BM_FullRowOperator)->Arg(8)->Arg(16)->Arg(32);

void BM_FrameBoundsAuto(benchmark::State& state) {
  lwf::frames::FrameAnalysisConfig cfg;
  cfg.order = {0, 2.0};
  cfg.auto_lattice = lwf::frames::AutoLattice{2.0, 0.5 * std::numbers::pi / std::log(2.0)};
  cfg.basis_size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lwf::frames::frame_bounds(cfg));
}
BENCHMARK(BM_FrameBoundsAuto)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_LatticeDensity(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(lwf::geometry::lattice_lower_density(std::numbers::e, 2.0 * std::numbers::pi, 0.99));
}
BENCHMARK(BM_LatticeDensity)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
