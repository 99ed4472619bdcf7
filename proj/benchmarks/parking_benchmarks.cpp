#include <parking/builtins.hpp>
#include <parking/enumeration.hpp>
#include <parking/forest.hpp>
#include <parking/probabilistic.hpp>

#include <benchmark/benchmark.h>

using namespace parking;

static void BM_CountParking(benchmark::State& state)
{
    Procedure p = builtin(parse_proc_spec("closest"));
    int r = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_parking(p, r, {7, 1}));
}
BENCHMARK(BM_CountParking)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_OrbitAudit(benchmark::State& state)
{
    Procedure p = lbs_procedure();
    int r = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(orbit_audit(p, r, {7, 1}));
}
BENCHMARK(BM_OrbitAudit)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Measure(benchmark::State& state)
{
    ProbProcedure p = pq_procedure(QParam(Rational(2)));
    Word w(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(measure(p, w));
}
BENCHMARK(BM_Measure)->DenseRange(2, 6);

static void BM_Encode(benchmark::State& state)
{
    Procedure p = naples_procedure(1);
    Word w{3, 1, 4, 1, 5, 2, 6};
    for (auto _ : state) benchmark::DoNotOptimize(encode(p, w));
}
BENCHMARK(BM_Encode);

static void BM_FiberFormula(benchmark::State& state)
{
    Procedure p = prime_procedure();
    std::vector<std::size_t> sigma{4, 2, 6, 1, 3, 5, 7};
    for (auto _ : state) benchmark::DoNotOptimize(fiber_count(p, sigma));
}
BENCHMARK(BM_FiberFormula);

BENCHMARK_MAIN();
