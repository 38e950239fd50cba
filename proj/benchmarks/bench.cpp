#include "fusionrep/engine.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace fusrep;

static void BM_character_table(benchmark::State& state) {
    auto g = preset_group("S4");
    for (auto _ : state) {
        auto t = character_table(g);
        benchmark::DoNotOptimize(t.conductor);
    }
}
BENCHMARK(BM_character_table);

static void BM_subgroup_enumeration(benchmark::State& state) {
    auto g = preset_group("S4");
    for (auto _ : state) {
        auto subs = enumerate_subgroups(g);
        benchmark::DoNotOptimize(subs.class_count());
    }
}
BENCHMARK(BM_subgroup_enumeration);

static void BM_hermite_normal_form(benchmark::State& state) {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> d(-30, 30);
    int n = static_cast<int>(state.range(0));
    IntMat a(n, IntVec(n));
    for (auto& row : a)
        for (auto& v : row)
            v = d(rng);
    for (auto _ : state) {
        auto h = hermite_normal_form(a);
        benchmark::DoNotOptimize(h.size());
    }
}
BENCHMARK(BM_hermite_normal_form)->Arg(8)->Arg(16)->Arg(32);

static void BM_characteristic_idempotent(benchmark::State& state) {
    auto ambient = preset_group("S4");
    auto sylow = sylow_subgroup(ambient, 2);
    auto f = build_fusion_system(ambient, sylow, 2);
    for (auto _ : state) {
        BisetAlgebra alg(f.s(), 2);
        auto w = characteristic_idempotent(alg, f);
        benchmark::DoNotOptimize(w.coeffs.size());
    }
}
BENCHMARK(BM_characteristic_idempotent);

static void BM_condition_lattice(benchmark::State& state) {
    auto ambient = preset_group("S4");
    auto sylow = sylow_subgroup(ambient, 2);
    auto f = build_fusion_system(ambient, sylow, 2);
    for (auto _ : state) {
        auto lat = lattice_Cba(f);
        benchmark::DoNotOptimize(lat.rank());
    }
}
BENCHMARK(BM_condition_lattice);

BENCHMARK_MAIN();
