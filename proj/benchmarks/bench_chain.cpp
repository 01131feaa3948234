#include <benchmark/benchmark.h>

#include <lacegate/rw_engine.hpp>
#include <lacegate/verifier.hpp>

using namespace lacegate;

static void bm_rw_bundle(benchmark::State &state)
{
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rw::rw_bundle(d, 500));
    }
}
BENCHMARK(bm_rw_bundle)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

static void bm_rw_bundle_N(benchmark::State &state)
{
    const auto N = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rw::rw_bundle(7, N));
    }
}
BENCHMARK(bm_rw_bundle_N)->RangeMultiplier(4)->Range(50, 3200)->Unit(benchmark::kMillisecond);

static void bm_verify_theorem(benchmark::State &state)
{
    const auto m = state.range(0) == 0 ? verify::model::saw : verify::model::percolation;
    const int d = m == verify::model::saw ? 6 : 9;
    const auto rw = rw::rw_bundle(d, 500);
    const auto K = verify::reference_constants(m, d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify::verify_theorem(rw, K));
    }
}
BENCHMARK(bm_verify_theorem)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

static void bm_search(benchmark::State &state)
{
    const auto grid = verify::grid_spec::uniform(make_rational(1, 100));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify::search_constants(verify::model::percolation, 9, 500, grid));
    }
}
BENCHMARK(bm_search)->Unit(benchmark::kMillisecond);
