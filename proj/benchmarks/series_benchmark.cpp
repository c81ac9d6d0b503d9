#include <automorph/basis.hpp>
#include <automorph/oracle.hpp>

#include <benchmark/benchmark.h>

using namespace automorph;

static void BM_MulIntegral(benchmark::State &state)
{
    const auto w = state.range(0);
    const auto e4 = oracle::eisenstein4(w);
    const auto e6 = oracle::eisenstein6(w);
    for (auto _ : state) {
        benchmark::DoNotOptimize(e4 * e6);
    }
}
BENCHMARK(BM_MulIntegral)->Arg(50)->Arg(200)->Arg(800);

static void BM_DivByDelta(benchmark::State &state)
{
    const auto w = state.range(0);
    const auto e4 = oracle::eisenstein4(w);
    const auto num = e4 * e4 * e4;
    const auto delta = oracle::discriminant(w);
    for (auto _ : state) {
        benchmark::DoNotOptimize(num / delta);
    }
}
BENCHMARK(BM_DivByDelta)->Arg(50)->Arg(200);

static void BM_DivRational(benchmark::State &state)
{
    const auto w = state.range(0);
    const auto f = scale(oracle::j_invariant(w), make_rational(3, 7));
    const auto g = oracle::eisenstein4(w) + QSeries::constant(make_rational(1, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(f / g);
    }
}
BENCHMARK(BM_DivRational)->Arg(30)->Arg(60);

static void BM_EtaQuotient(benchmark::State &state)
{
    const oracle::EtaQuotientSpec spec{{{1, 8}, {2, -24}, {4, 16}}, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::eta_quotient(spec, state.range(0)));
    }
}
BENCHMARK(BM_EtaQuotient)->Arg(100)->Arg(400);

static void BM_BuildBasis(benchmark::State &state)
{
    const auto &gd = registry_get("psl2z");
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_basis(gd, static_cast<int>(state.range(0)), 50));
    }
}
BENCHMARK(BM_BuildBasis)->Arg(12)->Arg(24);

static void BM_BuildBasisLambda(benchmark::State &state)
{
    const auto &gd = registry_get("gamma_2");
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_basis(gd, 12, 50));
    }
}
BENCHMARK(BM_BuildBasisLambda);

BENCHMARK_MAIN();
