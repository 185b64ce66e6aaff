// Serial reference vs OpenMP kernels. Compare pairs with the same arguments;
// thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "photon_ledger/kernels.hpp"
#include "photon_ledger/rng.hpp"

namespace k = photon_ledger::kernels;

namespace {

const std::vector<std::uint8_t>& bits_of(std::size_t n) {
    static std::vector<std::uint8_t> cache;
    if (cache.size() != n) {
        photon_ledger::SplitMix64 rng(1);
        cache.resize(n);
        for (auto& b : cache) b = rng.uniform() < 0.5;
    }
    return cache;
}

std::vector<double> occupancies_of(std::size_t n) {
    const auto& bits = bits_of(n);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = bits[i] ? 1e6 : 0.0;
    return out;
}

template <k::BlockCounts (*Fn)(std::span<const std::uint8_t>, int)>
void BM_count_blocks(benchmark::State& state) {
    const auto& bits = bits_of(static_cast<std::size_t>(state.range(0)));
    const int order = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(Fn(bits, order));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <std::size_t (*Fn)(std::span<const std::uint8_t>)>
void BM_count_ones(benchmark::State& state) {
    const auto& bits = bits_of(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Fn(bits));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <void (*Fn)(std::span<double>, double)>
void BM_scale(benchmark::State& state) {
    auto occ = occupancies_of(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        Fn(occ, 0.999999);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool (*Fn)(std::span<const double>, std::span<const double>)>
void BM_same_pattern(benchmark::State& state) {
    const auto a = occupancies_of(static_cast<std::size_t>(state.range(0)));
    auto b = a;
    for (auto& x : b) x *= 0.5;
    for (auto _ : state) benchmark::DoNotOptimize(Fn(a, b));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void block_args(benchmark::internal::Benchmark* b) {
    for (long n : {1L << 16, 1L << 20, 1L << 23}) {
        for (long order : {1L, 8L, 16L, 24L}) b->Args({n, order});
    }
}

void size_args(benchmark::internal::Benchmark* b) {
    for (long n : {1L << 16, 1L << 20, 1L << 23}) b->Arg(n);
}

}  // namespace

BENCHMARK_TEMPLATE(BM_count_blocks, k::serial::count_blocks)->Name("count_blocks/serial")->Apply(block_args);
BENCHMARK_TEMPLATE(BM_count_blocks, k::omp::count_blocks)->Name("count_blocks/omp")->Apply(block_args)->UseRealTime();
BENCHMARK_TEMPLATE(BM_count_ones, k::serial::count_ones)->Name("count_ones/serial")->Apply(size_args);
BENCHMARK_TEMPLATE(BM_count_ones, k::omp::count_ones)->Name("count_ones/omp")->Apply(size_args)->UseRealTime();
BENCHMARK_TEMPLATE(BM_scale, k::serial::scale)->Name("scale/serial")->Apply(size_args);
BENCHMARK_TEMPLATE(BM_scale, k::omp::scale)->Name("scale/omp")->Apply(size_args)->UseRealTime();
BENCHMARK_TEMPLATE(BM_same_pattern, k::serial::same_pattern)->Name("same_pattern/serial")->Apply(size_args);
BENCHMARK_TEMPLATE(BM_same_pattern, k::omp::same_pattern)->Name("same_pattern/omp")->Apply(size_args)->UseRealTime();

BENCHMARK_MAIN();
