#include <benchmark/benchmark.h>

#include "lam/correspondence.hpp"

using namespace lam;

namespace {

Leaf leaf(const char* a, const char* b) { return Leaf(Angle::parse(a), Angle::parse(b)); }

} // namespace

static void BM_BasilicaPullback(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_mac_lamination(2, leaf("1/3", "2/3"), n));
}
BENCHMARK(BM_BasilicaPullback)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_CubicPullback(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_mac_lamination(3, leaf("1/8", "3/8"), n));
}
BENCHMARK(BM_CubicPullback)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

static void BM_CheckInvariance(benchmark::State& state) {
    auto r = canonical_mac_lamination(2, leaf("1/7", "4/7"), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_invariance(r.lamination));
    state.counters["leaves"] = static_cast<double>(r.lamination.size());
}
BENCHMARK(BM_CheckInvariance)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Roundtrip(benchmark::State& state) {
    auto mac = *is_mac(3, leaf("1/8", "3/8"));
    for (auto _ : state) {
        auto scm = mac_to_scm(3, mac);
        auto a = canonical_mac_lamination(3, mac.major, 5);
        auto b = canonical_scm_lamination(3, scm.polygon, 5);
        benchmark::DoNotOptimize(lamination_equal_at_depth(a, b, 5));
    }
}
BENCHMARK(BM_Roundtrip)->Unit(benchmark::kMillisecond);
