#include <benchmark/benchmark.h>

#include <random>

#include "nchodge/cyclic.hpp"
#include "nchodge/linalg.hpp"

using namespace nchodge;

namespace {

QMatrix random_sparse(std::size_t n, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> v(-5, 5);
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (keep(rng)) m.set(i, j, BigRational(v(rng)));
  return m;
}

void BM_SparseRank(benchmark::State& state) {
  QMatrix m = random_sparse(static_cast<std::size_t>(state.range(0)), 0.02, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_SparseRank)->Arg(100)->Arg(200)->Arg(300);

void BM_DenseBareiss(benchmark::State& state) {
  QMatrix m = random_sparse(static_cast<std::size_t>(state.range(0)), 0.8, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_rank(m));
}
BENCHMARK(BM_DenseBareiss)->Arg(16)->Arg(32)->Arg(48);

// The real workload: Hochschild boundary of M_2(Q) in the normalized model.
void BM_HochschildBoundaryRank(benchmark::State& state) {
  auto m = mixed_complex(full_matrix(2), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t r = 0;
    for (std::size_t k = 1; k < m.b.size(); ++k) r += rank(m.b[k]);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_HochschildBoundaryRank)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
