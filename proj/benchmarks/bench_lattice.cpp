#include <benchmark/benchmark.h>

#include "latnorm/constructors.hpp"
#include "latnorm/lattice.hpp"
#include "latnorm/normalizers.hpp"

using namespace latnorm;

static void BM_EnumerateSubgroups_A5(benchmark::State& state) {
    const Group g = make_alternating(5);
    for (auto _ : state) {
        SubgroupLattice lat = enumerate_subgroups(g);
        benchmark::DoNotOptimize(lat.size());
    }
}
BENCHMARK(BM_EnumerateSubgroups_A5)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSubgroups_Dihedral(benchmark::State& state) {
    const Group g = make_dihedral(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        SubgroupLattice lat = enumerate_subgroups(g);
        benchmark::DoNotOptimize(lat.size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateSubgroups_Dihedral)->Arg(30)->Arg(60)->Arg(120)->Arg(240)
    ->Unit(benchmark::kMillisecond);

static void BM_NormalizerReport_S4(benchmark::State& state) {
    const Group g = make_symmetric(4);
    const SubgroupLattice lat = enumerate_subgroups(g);
    for (auto _ : state) {
        NormalizerReport rep = normalizer_report(g, lat);
        benchmark::DoNotOptimize(rep.deficiency_k);
    }
}
BENCHMARK(BM_NormalizerReport_S4)->Unit(benchmark::kMicrosecond);

static void BM_Closure_S5(benchmark::State& state) {
    const Group g = make_symmetric(5);
    // two elements that generate the whole group
    int t = -1, c = -1;
    for (int x = 0; x < g.order() && (t < 0 || c < 0); ++x) {
        if (t < 0 && g.element_order(x) == 2) t = x;
        if (c < 0 && g.element_order(x) == 5) c = x;
    }
    for (auto _ : state) {
        Subgroup h = closure(g, {t, c});
        benchmark::DoNotOptimize(h.size);
    }
}
BENCHMARK(BM_Closure_S5)->Unit(benchmark::kMicrosecond);

static void BM_GroupConstruction_Z512(benchmark::State& state) {
    for (auto _ : state) {
        Group g = make_cyclic(512);  // dominated by the O(n^3) associativity check
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_GroupConstruction_Z512)->Unit(benchmark::kMillisecond);
