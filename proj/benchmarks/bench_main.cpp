#include <benchmark/benchmark.h>

#include "radlat/cli/fuzz.hpp"
#include "radlat/cstar.hpp"
#include "radlat/relation.hpp"
#include "radlat/smallideal.hpp"

using namespace radlat;

static void BM_BooleanBuild(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(boolean_lattice(int(st.range(0))));
}
BENCHMARK(BM_BooleanBuild)->DenseRange(3, 8);

static void BM_Automorphisms(benchmark::State& st) {
    auto L = boolean_lattice(int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(automorphisms(*L));
}
BENCHMARK(BM_Automorphisms)->DenseRange(2, 5);

static Relation seeded(int k) {
    auto L = boolean_lattice(k);
    return validate_relation(L, {{0, 1}, {2, 6}});
}

static void BM_HClosure(benchmark::State& st) {
    Relation R = seeded(int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(h_closure(R));
}
BENCHMARK(BM_HClosure)->DenseRange(3, 6);

static void BM_SeriesClosure(benchmark::State& st) {
    Relation R = h_closure(seeded(int(st.range(0))));
    for (auto _ : st) benchmark::DoNotOptimize(rel_tri_right(R));
}
BENCHMARK(BM_SeriesClosure)->DenseRange(3, 6);

static void BM_TheoremInf(benchmark::State& st) {
    Relation R = h_closure(seeded(int(st.range(0))));
    for (auto _ : st) benchmark::DoNotOptimize(check_theorem_inf(R));
}
BENCHMARK(BM_TheoremInf)->DenseRange(3, 5);

static void BM_FuzzInstances(benchmark::State& st) {
    cli::RunConfig cfg;
    cfg.fuzz_count = int(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(cli::fuzz_instances(cfg));
}
BENCHMARK(BM_FuzzInstances)->Arg(50)->Arg(200);

static void BM_ModelStructure(benchmark::State& st) {
    Universe U = enumerate_algebras(int(st.range(0)), 3);
    Property comm = parse_property("comm");
    for (auto _ : st) {
        clear_property_cache();
        benchmark::DoNotOptimize(check_structure_theorems(comm, U));
    }
}
BENCHMARK(BM_ModelStructure)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_SmallRelation(benchmark::State& st) {
    auto L = chain(int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(rel_sm(L));
}
BENCHMARK(BM_SmallRelation)->RangeMultiplier(2)->Range(8, 64);

static void BM_SmallRelationBoolean(benchmark::State& st) {
    auto L = boolean_lattice(int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(rel_sm(L));
}
BENCHMARK(BM_SmallRelationBoolean)->DenseRange(3, 6);
BENCHMARK_MAIN();
