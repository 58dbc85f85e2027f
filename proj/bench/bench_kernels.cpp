// OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include "mband/cost.hpp"
#include "mband/forecast.hpp"
#include "mband/simulate.hpp"

namespace {

void BM_SamplePathsSerial(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mband::serial::sample_paths(0.0, 1.0, 12, count, 1));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count) * 12);
}

void BM_SamplePathsParallel(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mband::sample_paths(0.0, 1.0, 12, count, 1));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count) * 12);
}

void BM_SampleCostsParallel(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    const mband::CostSummary summary{22500.0, 3750.0, 26250.0, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(mband::sample_costs(10.0, 2.0, 12, summary, count, 1));
    }
}

mband::CalibrationConfig calibration(std::int64_t trials) {
    mband::CalibrationConfig c;
    c.trials = static_cast<std::size_t>(trials);
    c.rule = mband::DecisionRule::PValue;
    return c;
}

void BM_CalibrationSerial(benchmark::State& state) {
    const auto c = calibration(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mband::serial::run_calibration(c));
}

void BM_CalibrationParallel(benchmark::State& state) {
    const auto c = calibration(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mband::run_calibration(c));
}

}  // namespace

BENCHMARK(BM_SamplePathsSerial)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_SamplePathsParallel)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_SampleCostsParallel)->Arg(100'000);
BENCHMARK(BM_CalibrationSerial)->Arg(2'000);
BENCHMARK(BM_CalibrationParallel)->Arg(2'000);

BENCHMARK_MAIN();
