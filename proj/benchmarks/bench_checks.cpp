#include <benchmark/benchmark.h>

#include "horex/deformation.hpp"
#include "horex/hom_structures.hpp"

using namespace horex;

namespace {

void BM_CertifyHomAssoc(benchmark::State& state) {
  const ProductHandle h(state.range(1) == 0 ? quantum_plane() : enveloping(), ProductMode::Star);
  const auto bound = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify(Check::HomAssoc, h, bound));
}
BENCHMARK(BM_CertifyHomAssoc)->ArgsProduct({{1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CertifyHomJacobi(benchmark::State& state) {
  const ProductHandle h(enveloping(), ProductMode::Star);
  for (auto _ : state) benchmark::DoNotOptimize(certify(Check::HomJacobi, h, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_CertifyHomJacobi)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Bridge(benchmark::State& state) {
  const AlgebraPreset preset = quantum_plane();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_deformation(preset, DeformationCheck::Bridge, 3, kDefaultSeriesOrder));
  }
}
BENCHMARK(BM_Bridge)->Unit(benchmark::kMillisecond);

}  // namespace
