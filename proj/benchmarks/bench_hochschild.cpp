#include <benchmark/benchmark.h>

#include "nchodge/cyclic.hpp"

using namespace nchodge;

namespace {

void BM_MixedComplexNormalized(benchmark::State& state) {
  FDAlgebra a = full_matrix(2);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_complex(a, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MixedComplexNormalized)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_MixedComplexPeirce(benchmark::State& state) {
  FDAlgebra a = full_matrix(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mixed_complex(a, static_cast<int>(state.range(0)), MixedModel::Peirce));
  }
}
BENCHMARK(BM_MixedComplexPeirce)->Arg(5)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_PeriodicTables(benchmark::State& state) {
  FDAlgebra a = upper_triangular(3);
  for (auto _ : state) benchmark::DoNotOptimize(hc_hcminus_hp_dims(a, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PeriodicTables)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
