#include <benchmark/benchmark.h>

#include "lam/lamination.hpp"

using namespace lam;

static void BM_Sigma(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    auto pts = periodic_points(d, 6);
    for (auto _ : state)
        for (const auto& t : pts) benchmark::DoNotOptimize(sigma(d, t));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}
BENCHMARK(BM_Sigma)->Arg(2)->Arg(3)->Arg(5);

static void BM_Preimages(benchmark::State& state) {
    auto pts = periodic_points(3, 6);
    for (auto _ : state)
        for (const auto& t : pts) benchmark::DoNotOptimize(preimages(3, t));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}
BENCHMARK(BM_Preimages);

// Large denominators leave the machine-word fast path.
static void BM_SigmaBig(benchmark::State& state) {
    Angle t = Angle::from_fraction(BigInt(1), ipow(3, 60) - 1);
    for (auto _ : state) {
        t = sigma(3, t);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_SigmaBig);

static void BM_FindCrossing(benchmark::State& state) {
    auto pts = periodic_points(2, 10);
    std::vector<Leaf> leaves;
    // Nested, non-crossing chords.
    for (std::size_t i = 0; i + 1 < pts.size() / 2; ++i) leaves.emplace_back(pts[i], pts[pts.size() - 1 - i]);
    for (auto _ : state) benchmark::DoNotOptimize(find_crossing(leaves));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(leaves.size()));
}
BENCHMARK(BM_FindCrossing);
