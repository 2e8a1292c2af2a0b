#include <benchmark/benchmark.h>

#include "horex/deformation.hpp"
#include "horex/ore.hpp"

using namespace horex;

namespace {

AlgebraPreset preset_for(int index) { return index == 0 ? quantum_plane() : enveloping(); }

void BM_Pi(benchmark::State& state) {
  const AlgebraPreset preset = preset_for(static_cast<int>(state.range(1)));
  const auto m = static_cast<std::uint32_t>(state.range(0));
  const BasePoly b = BasePoly::y(4);
  for (auto _ : state) benchmark::DoNotOptimize(pi_row(m, preset, b));
}
BENCHMARK(BM_Pi)->ArgsProduct({{2, 4, 8, 12}, {0, 1}});

// Product of two dense elements with every monomial y^m x^n, m, n <= D.
void BM_OreMulDense(benchmark::State& state) {
  const AlgebraPreset preset = preset_for(static_cast<int>(state.range(1)));
  OrePoly dense;
  for (const auto& p : monomial_grid(static_cast<std::uint32_t>(state.range(0)))) dense += p;
  for (auto _ : state) benchmark::DoNotOptimize(ore_mul(dense, dense, preset));
}
BENCHMARK(BM_OreMulDense)->ArgsProduct({{1, 2, 3, 4}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_Star(benchmark::State& state) {
  const AlgebraPreset preset = enveloping();
  const OrePoly a = OrePoly::monomial(1, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(star(a, a, preset));
}
BENCHMARK(BM_Star);

void BM_ProductT(benchmark::State& state) {
  const DeformedStructure d(enveloping(), static_cast<std::uint32_t>(state.range(0)));
  const SeriesOrePoly a = d.lift(OrePoly::monomial(1, 3, 3));
  for (auto _ : state) benchmark::DoNotOptimize(product_t(a, a, d));
}
BENCHMARK(BM_ProductT)->Arg(2)->Arg(8);

}  // namespace
