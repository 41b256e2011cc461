#include <benchmark/benchmark.h>

#include "divisum/engine.hpp"
#include "divisum/expr.hpp"
#include "divisum/numeric_oracle.hpp"
#include "divisum/special_numbers.hpp"

using namespace divisum;

static void BM_ClassifyP(benchmark::State& state) {
    GfSeq u = make_P(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(classify(u));
}
BENCHMARK(BM_ClassifyP)->Arg(1)->Arg(4)->Arg(8)->Arg(12);

static void BM_PoleCancellation(benchmark::State& state) {
    GfSeq u = make_P(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_pole_cancellation(u, kDefaultMaxSupport));
}
BENCHMARK(BM_PoleCancellation)->Arg(1)->Arg(4)->Arg(7);

static void BM_Terms(benchmark::State& state) {
    GfSeq u = make_AP(3);
    for (auto _ : state) benchmark::DoNotOptimize(terms(u, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Terms)->Arg(64)->Arg(512);

static void BM_DStarFinite(benchmark::State& state) {
    GfSeq u = make_P(2);
    FiniteSeq p{1, -3, 2, 5};
    for (auto _ : state) benchmark::DoNotOptimize(dstar_with_finite(u, p));
}
BENCHMARK(BM_DStarFinite);

static void BM_Bernoulli(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        NumberCache cache;
        benchmark::DoNotOptimize(cache.bernoulli_plus(n));
    }
}
BENCHMARK(BM_Bernoulli)->Arg(20)->Arg(100);

static void BM_Worpitzky(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bernoulli_worpitzky(n));
}
BENCHMARK(BM_Worpitzky)->Arg(20)->Arg(60);

static void BM_ParseElaborate(benchmark::State& state) {
    const std::string text = "1/2*(P(1) os (e(0) - 2*e(1)) + P(0) os (e(0) - e(1)))";
    for (auto _ : state) benchmark::DoNotOptimize(elaborate(*parse(text)));
}
BENCHMARK(BM_ParseElaborate);

static void BM_Abel(benchmark::State& state) {
    GfSeq u = make_AP(2);
    for (auto _ : state) benchmark::DoNotOptimize(abel_estimate(u, 1 << 16));
}
BENCHMARK(BM_Abel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
