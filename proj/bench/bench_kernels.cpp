// Serial reference path against the OpenMP path for the grid kernels.

#include "hcross/extremal.hpp"
#include "hcross/grid.hpp"
#include "hcross/norms.hpp"
#include "hcross/sampling.hpp"

#include <benchmark/benchmark.h>

using namespace hcross;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_EvalGridDirect(benchmark::State& st) {
    Rng rng = make_rng(1);
    const TrigPoly f = random_poly(2, 60, 200, rng);
    const std::vector<int> shape{128, 128};
    for (auto _ : st) benchmark::DoNotOptimize(eval_grid_direct(f, shape, exec_of(st)));
    st.SetLabel(exec_of(st) == Exec::Parallel ? "parallel" : "serial");
}

void BM_PowerMean(benchmark::State& st) {
    Rng rng = make_rng(2);
    const TrigPoly f = random_poly(3, 30, 100, rng);
    const auto v = eval_grid(f, GridSpec{});
    for (auto _ : st) benchmark::DoNotOptimize(power_mean(v.values, 3.0, exec_of(st)));
    st.SetLabel(exec_of(st) == Exec::Parallel ? "parallel" : "serial");
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(v.size()));
}

void BM_BlockNorms(benchmark::State& st) {
    const TrigPoly f = extremal_g({10, 2, 1.5, 2.0, 1.0, 1.0});
    for (auto _ : st)
        benchmark::DoNotOptimize(
            block_norms(f, 3.0, BlockForm::SmoothA, ASConvention::PartitionExact, GridSpec{}, exec_of(st)));
    st.SetLabel(exec_of(st) == Exec::Parallel ? "parallel" : "serial");
}

} // namespace

BENCHMARK(BM_EvalGridDirect)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerMean)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BlockNorms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
