// Compares the solving kernels on fixed instances: exhaustive reference
// (serial vs. thread-parallel block scan) and the branch-and-bound solver.
#include <benchmark/benchmark.h>

#include "mgdom/graph.hpp"
#include "mgdom/solve.hpp"
#include "mgdom/transform.hpp"

namespace {

using namespace mgdom;

Graph instance(int which) {
    switch (which) {
        case 0: return generate({Family::Cycle, 12});
        case 1: return MiddleGraph(generate({Family::Path, 6})).graph();
        default: return MiddleGraph(generate({Family::Cycle, 8})).graph();
    }
}

const char* instance_name(int which) {
    switch (which) {
        case 0: return "C_12";
        case 1: return "M(P_6)";
        default: return "M(C_8)";
    }
}

void BM_oracle_serial(benchmark::State& state) {
    const Graph g = instance(static_cast<int>(state.range(0)));
    long long value = 0;
    for (auto _ : state) {
        const auto r = brute_force_oracle(g, DominationKind::PairedDisjunctive);
        value = r.value;
        benchmark::DoNotOptimize(value);
    }
    state.SetLabel(instance_name(static_cast<int>(state.range(0))));
    state.counters["value"] = static_cast<double>(value);
}

void BM_oracle_parallel(benchmark::State& state) {
    const Graph g = instance(static_cast<int>(state.range(0)));
    const int threads = static_cast<int>(state.range(1));
    long long value = 0;
    for (auto _ : state) {
        const auto r = brute_force_oracle_parallel(g, DominationKind::PairedDisjunctive, threads);
        value = r.value;
        benchmark::DoNotOptimize(value);
    }
    state.SetLabel(instance_name(static_cast<int>(state.range(0))));
    state.counters["value"] = static_cast<double>(value);
}

void BM_branch_and_bound(benchmark::State& state) {
    const Graph g = instance(static_cast<int>(state.range(0)));
    long long value = 0;
    for (auto _ : state) {
        const auto r = minimum(g, DominationKind::PairedDisjunctive);
        value = r.value;
        benchmark::DoNotOptimize(value);
    }
    state.SetLabel(instance_name(static_cast<int>(state.range(0))));
    state.counters["value"] = static_cast<double>(value);
}

void BM_greedy_start(benchmark::State& state) {
    const Graph g = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto d = greedy_upper_bound(g, DominationKind::PairedDisjunctive);
        benchmark::DoNotOptimize(d);
    }
    state.SetLabel(instance_name(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_oracle_serial)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_parallel)
    ->Args({0, 1})
    ->Args({0, 2})
    ->Args({0, 4})
    ->Args({1, 1})
    ->Args({1, 2})
    ->Args({1, 4})
    ->Args({2, 1})
    ->Args({2, 2})
    ->Args({2, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_branch_and_bound)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_greedy_start)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
