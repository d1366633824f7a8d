// Serial reference kernels against their OpenMP counterparts on random
// small-height rational matrices of growing size.

#include "pqh/generate.hpp"
#include "pqh/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace pqh;

namespace {

Matrix input(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_matrix(rng, n, n);
}

Matrix symmetric_input(std::size_t n) {
  const Matrix a = input(n, 11);
  return a + a.transpose();
}

void BM_rref_serial(benchmark::State& st) {
  const Matrix m = input(st.range(0), 7);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::rref_serial(m));
}
void BM_rref_parallel(benchmark::State& st) {
  const Matrix m = input(st.range(0), 7);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::rref_parallel(m));
}
void BM_matmul_serial(benchmark::State& st) {
  const Matrix a = input(st.range(0), 3), b = input(st.range(0), 5);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::matmul_serial(a, b));
}
void BM_matmul_parallel(benchmark::State& st) {
  const Matrix a = input(st.range(0), 3), b = input(st.range(0), 5);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::matmul_parallel(a, b));
}
void BM_inertia_serial(benchmark::State& st) {
  const Matrix m = symmetric_input(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::inertia_serial(m));
}
void BM_inertia_parallel(benchmark::State& st) {
  const Matrix m = symmetric_input(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::inertia_parallel(m));
}

} // namespace

BENCHMARK(BM_rref_serial)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_rref_parallel)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_matmul_serial)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_matmul_parallel)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_inertia_serial)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_inertia_parallel)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
