// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "nilcone/closure_oracles.hpp"
#include "nilcone/enhanced.hpp"

using namespace nilcone;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

// The zero orbit against the largest orbit exercises the whole flag search.
void BM_FlagOracle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(1));
    const auto p = static_cast<std::uint32_t>(state.range(2));
    const Bipartition small{{}, Partition::column(n)}, big{Partition::column(n), {}};
    for (auto _ : state) benchmark::DoNotOptimize(closure_oracle_flag(big, small, p, mode(state)));
    state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_SweepOracle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(1));
    const auto p = static_cast<std::uint32_t>(state.range(2));
    const Bipartition small{{}, Partition::column(n)}, big{Partition::column(n), {}};
    for (auto _ : state) benchmark::DoNotOptimize(closure_oracle_sweep(big, small, p, mode(state)));
    state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_ClosureGate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(1));
    const auto p = static_cast<std::uint32_t>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(closure_gate(n, p, n <= 3, mode(state)).ok());
    state.SetLabel(state.range(0) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_FlagOracle)->ArgsProduct({{0, 1}, {4, 5}, {3}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOracle)->ArgsProduct({{0, 1}, {3}, {3, 5}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureGate)->ArgsProduct({{0, 1}, {3, 4}, {3}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
