// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to vary the pool.

#include <benchmark/benchmark.h>

#include "trisectrix/construct.hpp"
#include "trisectrix/curve.hpp"
#include "trisectrix/linkage.hpp"

namespace {

using namespace trisectrix;

const std::vector<construct::Method> kBoth{construct::Method::Curve, construct::Method::Scudder};

void BM_SweepSerial(benchmark::State& state) {
    const double step = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(construct::sweep_verify_serial(1.0, 269.0, step, kBoth));
    }
    state.SetItemsProcessed(state.iterations() * construct::sweep_grid(1.0, 269.0, step).size());
}

void BM_SweepParallel(benchmark::State& state) {
    const double step = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(construct::sweep_verify(1.0, 269.0, step, kBoth));
    }
    state.SetItemsProcessed(state.iterations() * construct::sweep_grid(1.0, 269.0, step).size());
}

void BM_SampleTraceSerial(benchmark::State& state) {
    const curve::TraceParam lo(0.005), hi(geom::kPi / 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(curve::sample_trace_serial(lo, hi, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleTraceParallel(benchmark::State& state) {
    const curve::TraceParam lo(0.005), hi(geom::kPi / 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(curve::sample_trace(lo, hi, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TraceCurveSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(linkage::trace_curve_serial(0.01, 3.13, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TraceCurveParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(linkage::trace_curve(0.01, 3.13, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_SweepSerial)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleTraceSerial)->Arg(1000)->Arg(1000000);
BENCHMARK(BM_SampleTraceParallel)->Arg(1000)->Arg(1000000);
BENCHMARK(BM_TraceCurveSerial)->Arg(1000)->Arg(1000000);
BENCHMARK(BM_TraceCurveParallel)->Arg(1000)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
