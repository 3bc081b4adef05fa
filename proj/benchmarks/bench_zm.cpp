#include <benchmark/benchmark.h>

#include "latnorm/zm.hpp"
#include "latnorm/zm_analysis.hpp"

using namespace latnorm;

static void BM_EnumerateL_D54(benchmark::State& state) {
    const ZmTriple t = validate_zm_triple(27, 2, 26);
    for (auto _ : state) {
        auto triples = enumerate_L(t);
        benchmark::DoNotOptimize(triples.size());
    }
}
BENCHMARK(BM_EnumerateL_D54);

static void BM_VerifyBijection_D30(benchmark::State& state) {
    const ZmTriple t = validate_zm_triple(15, 2, 14);
    for (auto _ : state) {
        BijectionReport rep = verify_bijection(t);
        benchmark::DoNotOptimize(rep.pass);
    }
}
BENCHMARK(BM_VerifyBijection_D30)->Unit(benchmark::kMillisecond);

static void BM_ZmSearch(benchmark::State& state) {
    for (auto _ : state) {
        auto hits = zm_search(static_cast<long long>(state.range(0)), 2);
        benchmark::DoNotOptimize(hits.size());
    }
}
BENCHMARK(BM_ZmSearch)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
