#include <benchmark/benchmark.h>

#include "cuspcensus/census.hpp"
#include "cuspcensus/generate.hpp"
#include "cuspcensus/groebner.hpp"

using namespace cuspcensus;

static void BM_PolyMul(benchmark::State& state) {
    Poly a = generate_map(int(state.range(0)), 2, 1).f;
    Poly b = generate_map(int(state.range(0)), 2, 2).f;
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8);

static void BM_GradientQuotient(benchmark::State& state) {
    PlaneMap F = generate_map(int(state.range(0)), int(state.range(0)), 3);
    std::vector<Poly> gens{F.f.partial(Var::x), F.f.partial(Var::y)};
    for (auto _ : state) benchmark::DoNotOptimize(quotient_dimension(gens));
}
BENCHMARK(BM_GradientQuotient)->Arg(3)->Arg(4);

static void BM_GradientQuotientFp(benchmark::State& state) {
    PlaneMap F = generate_map(int(state.range(0)), int(state.range(0)), 3);
    std::vector<Poly> gens{F.f.partial(Var::x), F.f.partial(Var::y)};
    for (auto _ : state) benchmark::DoNotOptimize(quotient_dimension(to_fp(gens, kDefaultPrime)));
}
BENCHMARK(BM_GradientQuotientFp)->Arg(3)->Arg(4);

static void BM_FullCensus(benchmark::State& state) {
    PlaneMap F = generate_map(3, 2, 7);
    for (auto _ : state) benchmark::DoNotOptimize(full_census(F, 7));
}
BENCHMARK(BM_FullCensus);

static void BM_CuspIndex(benchmark::State& state) {
    PlaneMap F = PlaneMap::of(Poly::variable(VarSet::xy(), Var::x),
                              generate_map(1, 4, 9).g);
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(generalized_cusp_index(F, RatPoint::origin()));
        } catch (const std::exception&) {
        }
    }
}
BENCHMARK(BM_CuspIndex);

BENCHMARK_MAIN();
