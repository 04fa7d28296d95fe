#include <benchmark/benchmark.h>

#include "lam/catalog.hpp"

using namespace lam;

static void BM_CatalogPeriod(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    std::size_t found = 0;
    for (auto _ : state) found = catalog_period(d, n).size();
    state.counters["macs"] = static_cast<double>(found);
}
BENCHMARK(BM_CatalogPeriod)
    ->Args({2, 6})
    ->Args({2, 8})
    ->Args({3, 5})
    ->Args({3, 6})
    ->Args({4, 5})
    ->Unit(benchmark::kMillisecond);

static void BM_IsMac(benchmark::State& state) {
    auto cands = catalog_period(3, 4);
    for (auto _ : state)
        for (const auto& m : cands) benchmark::DoNotOptimize(is_mac(3, m.major));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(cands.size()));
}
BENCHMARK(BM_IsMac)->Unit(benchmark::kMicrosecond);
