#include <benchmark/benchmark.h>

#include "mdenum/counting.hpp"
#include "mdenum/oracle.hpp"
#include "mdenum/transfer.hpp"

using namespace mdenum;

static void BM_HosoyaSquare(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hosoya_index(m, m));
  state.SetComplexityN(m);
}
BENCHMARK(BM_HosoyaSquare)->DenseRange(8, 18, 2)->Unit(benchmark::kMillisecond);

static void BM_SingleRowApply(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto op = build_bar_operator(m, numeric_weights(1, 1, 1));
  std::vector<Natural> row(op.states(), 1);
  for (auto _ : state) {
    op.apply(row);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(op.states()));
}
BENCHMARK(BM_SingleRowApply)->DenseRange(10, 20, 2)->Unit(benchmark::kMicrosecond);

static void BM_PartitionPolynomial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partition_function(m, m));
}
BENCHMARK(BM_PartitionPolynomial)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_AztecDiamond(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RegionSpec spec;
  spec.m = spec.n = 2 * n;
  spec.p = spec.q = spec.r = spec.s = n;
  for (auto _ : state) benchmark::DoNotOptimize(aztec_octagon_count(spec));
}
BENCHMARK(BM_AztecDiamond)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_DenseVersusSweep(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto op = build_bar_operator(m, numeric_weights(1, 1, 1));
  const auto dense = dense_matrix(op);
  std::vector<Natural> row(op.states(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(dense_row_times(row, dense));
}
BENCHMARK(BM_DenseVersusSweep)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

static void BM_Kasteleyn(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::kasteleyn_product(m, m));
}
BENCHMARK(BM_Kasteleyn)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
