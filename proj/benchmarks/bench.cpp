#include <benchmark/benchmark.h>

#include "fairshare/fairness.hpp"
#include "fairshare/generators.hpp"
#include "fairshare/matching.hpp"
#include "fairshare/oracle.hpp"
#include "fairshare/solver.hpp"

namespace {

void BM_SolvePefCap2(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    fairshare::Instance inst =
        fairshare::random_dorm(42, m, 2, fairshare::Rational(1, 3), 5);
    for (auto _ : state) {
        auto result = fairshare::solve_pef_cap2(inst);
        benchmark::DoNotOptimize(result.assignment);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolvePefCap2)->RangeMultiplier(2)->Range(4, 128)->Complexity();

void BM_MaxMatching(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    fairshare::Instance inst =
        fairshare::random_dorm(7, m, 2, fairshare::Rational(1, 2), 1);
    const fairshare::Graph& g = *inst.profile.externality_graph;
    for (auto _ : state) {
        auto matching = fairshare::max_matching(g);
        benchmark::DoNotOptimize(matching);
    }
}
BENCHMARK(BM_MaxMatching)->RangeMultiplier(2)->Range(8, 128);

void BM_GallaiEdmonds(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    fairshare::Instance inst =
        fairshare::random_dorm(7, m, 2, fairshare::Rational(1, 2), 1);
    const fairshare::Graph& g = *inst.profile.externality_graph;
    for (auto _ : state) {
        auto decomp = fairshare::gallai_edmonds(g);
        benchmark::DoNotOptimize(decomp);
    }
}
BENCHMARK(BM_GallaiEdmonds)->RangeMultiplier(2)->Range(8, 64);

void BM_DecidePefTwoDorms(benchmark::State& state) {
    fairshare::Instance inst = fairshare::canned_instance("no-pef-cap5").instance;
    for (auto _ : state) {
        auto witness = fairshare::decide_pef(inst);
        benchmark::DoNotOptimize(witness);
    }
}
BENCHMARK(BM_DecidePefTwoDorms);

void BM_CheckPef(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    fairshare::Instance inst =
        fairshare::random_dorm(11, m, 2, fairshare::Rational(1, 3), 5);
    fairshare::Assignment x = fairshare::solve_pef_cap2(inst).assignment;
    for (auto _ : state) {
        auto report = fairshare::check_pef(inst, x);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_CheckPef)->RangeMultiplier(4)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
