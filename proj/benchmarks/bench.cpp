#include "k3o/surfaces.hpp"
#include "k3o/tame.hpp"
#include "k3o/wild.hpp"

#include <benchmark/benchmark.h>

using namespace k3o;

static void BM_RamanujanTable(benchmark::State& state) {
    for (auto _ : state) {
        Int acc = 0;
        for (Int d = 1; d <= 66; ++d)
            for (Int k = 1; k <= 132; ++k) acc += ramanujan_sum(d, k);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_RamanujanTable);

static void BM_EnumerateProfiles_1_66(benchmark::State& state) {
    for (auto _ : state) {
        auto e = enumerate_profiles({1, 66});
        benchmark::DoNotOptimize(e.profiles.size());
    }
}
BENCHMARK(BM_EnumerateProfiles_1_66);

static void BM_ClassifyOrder60(benchmark::State& state) {
    for (auto _ : state) {
        auto v = classify_order(60, 0);
        benchmark::DoNotOptimize(v.feasible);
    }
}
BENCHMARK(BM_ClassifyOrder60);

static void BM_WildEnumerate_11_4(benchmark::State& state) {
    for (auto _ : state) {
        auto e = wild_enumerate(11, 4);
        benchmark::DoNotOptimize(e.size());
    }
}
BENCHMARK(BM_WildEnumerate_11_4);

static void BM_VerifyX66(benchmark::State& state) {
    for (auto _ : state) {
        auto r = verify_entry("X66", 0);
        benchmark::DoNotOptimize(r.all_pass());
    }
}
BENCHMARK(BM_VerifyX66);

static void BM_Replay_L97(benchmark::State& state) {
    for (auto _ : state) {
        auto r = replay_lemma("L9.7_1pt");
        benchmark::DoNotOptimize(r.all_ok());
    }
}
BENCHMARK(BM_Replay_L97);

BENCHMARK_MAIN();
