// Throughput of the OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "cvsim/constraints.hpp"
#include "cvsim/measurement.hpp"
#include "cvsim/protocols.hpp"

namespace {

constexpr uint64_t kSeed = 0xC0FFEE;

void BM_EstimationBatchSerial(benchmark::State& state) {
    const auto shots = static_cast<int64_t>(state.range(0));
    const cvsim::GaussianState copy = cvsim::coherent_state(1.0, 2.0);
    for (auto _ : state) {
        auto result = cvsim::batch_serial(
            [&](cvsim::RngStream& rng) {
                const cvsim::Outcome a = cvsim::heterodyne_sample(copy, 0, rng);
                const cvsim::Outcome b = cvsim::heterodyne_sample(copy, 0, rng);
                return Eigen::Vector2d((a.values + b.values) / 2.0);
            },
            2, shots, {kSeed, 1});
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(state.iterations() * shots);
}

void BM_EstimationBatchParallel(benchmark::State& state) {
    const auto shots = static_cast<int64_t>(state.range(0));
    const cvsim::GaussianState copy = cvsim::coherent_state(1.0, 2.0);
    for (auto _ : state) {
        auto result = cvsim::batch(
            [&](cvsim::RngStream& rng) {
                const cvsim::Outcome a = cvsim::heterodyne_sample(copy, 0, rng);
                const cvsim::Outcome b = cvsim::heterodyne_sample(copy, 0, rng);
                return Eigen::Vector2d((a.values + b.values) / 2.0);
            },
            2, shots, {kSeed, 1});
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(state.iterations() * shots);
}

void BM_UniquenessSearchSerial(benchmark::State& state) {
    const auto samples = static_cast<int64_t>(state.range(0));
    for (auto _ : state) {
        auto summary = cvsim::random_search_uniqueness_serial(samples, kSeed);
        benchmark::DoNotOptimize(summary);
    }
    state.SetItemsProcessed(state.iterations() * samples);
}

void BM_UniquenessSearchParallel(benchmark::State& state) {
    const auto samples = static_cast<int64_t>(state.range(0));
    for (auto _ : state) {
        auto summary = cvsim::random_search_uniqueness(samples, kSeed);
        benchmark::DoNotOptimize(summary);
    }
    state.SetItemsProcessed(state.iterations() * samples);
}

void BM_GridScanSerial(benchmark::State& state) {
    for (auto _ : state) {
        auto result = cvsim::scan_row1_grid_serial(1e-3);
        benchmark::DoNotOptimize(result);
    }
}

void BM_GridScanParallel(benchmark::State& state) {
    for (auto _ : state) {
        auto result = cvsim::scan_row1_grid(1e-3);
        benchmark::DoNotOptimize(result);
    }
}

BENCHMARK(BM_EstimationBatchSerial)->Arg(1 << 14)->Arg(1 << 17);
BENCHMARK(BM_EstimationBatchParallel)->Arg(1 << 14)->Arg(1 << 17);
BENCHMARK(BM_UniquenessSearchSerial)->Arg(1 << 14);
BENCHMARK(BM_UniquenessSearchParallel)->Arg(1 << 14);
BENCHMARK(BM_GridScanSerial);
BENCHMARK(BM_GridScanParallel);

}  // namespace

BENCHMARK_MAIN();
