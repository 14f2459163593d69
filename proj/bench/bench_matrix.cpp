// Serial reference vs OpenMP class-distance matrix.

#include <benchmark/benchmark.h>

#include "hausdorff/iso.hpp"

using namespace hausdorff;

static void BM_MatrixSerial(benchmark::State& state) {
  const auto classes = enumerate_classes(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(class_distance_matrix_serial(classes));
}
BENCHMARK(BM_MatrixSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_MatrixParallel(benchmark::State& state) {
  const auto classes = enumerate_classes(static_cast<std::size_t>(state.range(0)));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(class_distance_matrix(classes, jobs));
}
BENCHMARK(BM_MatrixParallel)->Args({3, 1})->Args({4, 1})->Args({4, 2})->Args({4, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
