#include <benchmark/benchmark.h>

#include "uhopf/uhopf.hpp"

namespace {

using namespace uhopf;

ActionSpec bench_spec(int n)
{
    const HopfParams params = HopfParams::make({1.0, 2.0}, n, 1);
    return ActionSpec::make(ActionKind::Type1, 1, 0, 2, params, random_well_conditioned(n, 7));
}

void BM_IsEffective(benchmark::State& state)
{
    const EffectivenessParams ep{ActionKind::Type2, 5, 7, 123, -45, state.range(0)};
    for (auto _ : state) benchmark::DoNotOptimize(is_effective(ep));
}
BENCHMARK(BM_IsEffective)->Arg(3)->Arg(1000)->Arg(1000000);

void BM_WindowSearch(benchmark::State& state)
{
    const EffectivenessParams ep{ActionKind::Type2, 5, 7, 123, -45, state.range(0)};
    const numth::Int period = static_cast<numth::Int>(state.range(0)) * 7;
    for (auto _ : state) benchmark::DoNotOptimize(find_witness_in_window(ep, 0, period - 1));
}
BENCHMARK(BM_WindowSearch)->Arg(3)->Arg(1000);

void BM_Act(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const ActionSpec spec = bench_spec(n);
    CounterRng rng(1);
    const CMatrix A = random_unitary(n, rng);
    const OrbitPoint z = random_point(spec.params(), rng);
    for (auto _ : state) benchmark::DoNotOptimize(act(spec, A, z));
}
BENCHMARK(BM_Act)->Arg(2)->Arg(4)->Arg(8);

void BM_SolveTransport(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const ActionSpec spec = bench_spec(n);
    CounterRng rng(2);
    const OrbitPoint z = random_point(spec.params(), rng);
    const OrbitPoint w = random_point(spec.params(), rng);
    for (auto _ : state) benchmark::DoNotOptimize(solve_transport(spec, z, w));
}
BENCHMARK(BM_SolveTransport)->Arg(2)->Arg(4)->Arg(8);

void BM_KernelScan(benchmark::State& state)
{
    const HopfParams params = HopfParams::make({4.0, 0.0}, 4, 5);
    const ActionSpec spec = ActionSpec::make(ActionKind::Type1, 1, 2, 3, params);
    for (auto _ : state) benchmark::DoNotOptimize(numeric_kernel_scan(spec, 10, 1e-9, 3));
}
BENCHMARK(BM_KernelScan);

}  // namespace

BENCHMARK_MAIN();
