#include <benchmark/benchmark.h>

#include <random>

#include <lacegate/oracles/perc_tiny.hpp>
#include <lacegate/oracles/rw_convolution.hpp>
#include <lacegate/oracles/saw_enumeration.hpp>

using namespace lacegate;

static void bm_saw_recursion(benchmark::State &state)
{
    const int d = static_cast<int>(state.range(0));
    const int m = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::verify_saw_recursion(d, m, 2));
    }
}
BENCHMARK(bm_saw_recursion)->Args({2, 4})->Args({2, 6})->Args({3, 6})->Unit(benchmark::kMillisecond);

static void bm_rw_convolution(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::rw_convolution_check(3, 8));
    }
}
BENCHMARK(bm_rw_convolution)->Unit(benchmark::kMillisecond);

static void bm_perc_tiny(benchmark::State &state)
{
    const auto bonds = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(3);
    const auto g = oracle::random_graph(rng, bonds);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::perc_exact_tiny(g, g.source, g.target));
    }
}
BENCHMARK(bm_perc_tiny)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);
