// Serial references vs OpenMP kernels.

#include "pluri/search.hpp"

#include <benchmark/benchmark.h>

namespace {

const std::vector<pluri::Sample> kSamples{{2, 4}, {3, 9}, {4, 18}, {5, 32}, {6, 53}};

void BM_prop26_serial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(pluri::serial::verify_prop26(state.range(0), 200));
    }
}

void BM_prop26_omp(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(pluri::verify_prop26(state.range(0), 200));
    }
}

void BM_prop27_serial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(pluri::serial::verify_prop27(state.range(0)));
    }
}

void BM_prop27_omp(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(pluri::verify_prop27(state.range(0)));
    }
}

void BM_match_serial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(pluri::serial::match_baskets(-1, kSamples, state.range(0), 3));
    }
}

void BM_match_omp(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(pluri::match_baskets(-1, kSamples, state.range(0), 3));
    }
}

}  // namespace

BENCHMARK(BM_prop26_serial)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_prop26_omp)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_prop27_serial)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_prop27_omp)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_match_serial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_match_omp)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
