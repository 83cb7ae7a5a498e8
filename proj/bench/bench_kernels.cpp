#include <benchmark/benchmark.h>

#include "ietlab/family.hpp"
#include "ietlab/kernels.hpp"

namespace {

using namespace ietlab;

ParameterSchedule bench_schedule(int n) { return schedule(n, BigInt(4 * n), BigInt(16 * n * n), 12); }

std::vector<IntVector> unit_seeds(int n) {
  std::vector<IntVector> seeds;
  for (int j = 1; j <= n; ++j) seeds.push_back(unit_vector(static_cast<std::size_t>(n), j));
  return seeds;
}

void BM_PrefixSerial(benchmark::State& state) {
  const auto factors = bench_schedule(static_cast<int>(state.range(0))).thetas(12);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::prefix_products(factors));
}

void BM_PrefixOpenMP(benchmark::State& state) {
  const auto factors = bench_schedule(static_cast<int>(state.range(0))).thetas(12);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::prefix_products(factors));
}

void BM_SuffixSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto factors = bench_schedule(n).thetas(12);
  const auto seeds = unit_seeds(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::suffix_chains(factors, seeds));
}

void BM_SuffixOpenMP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto factors = bench_schedule(n).thetas(12);
  const auto seeds = unit_seeds(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::suffix_chains(factors, seeds));
}

}  // namespace

BENCHMARK(BM_PrefixSerial)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrefixOpenMP)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuffixSerial)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuffixOpenMP)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
