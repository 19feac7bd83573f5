#include <benchmark/benchmark.h>

#include "isoclass/census.hpp"
#include "isoclass/characters.hpp"
#include "isoclass/quadforms.hpp"
#include "isoclass/sieve.hpp"

using namespace isoclass;

static void BM_Census(benchmark::State& state)
{
    const auto p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(census::census(p).total);
}
BENCHMARK(BM_Census)->Arg(1009)->Arg(10007)->Unit(benchmark::kMillisecond);

static void BM_TraceOfCurve(benchmark::State& state)
{
    const std::int64_t p = state.range(0);
    const census::ResidueTable table(p);
    std::int64_t b = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(census::trace_of_curve({p, 3, b}, table));
        b = b % (p - 1) + 1;
    }
}
BENCHMARK(BM_TraceOfCurve)->Arg(10007)->Arg(100003);

static void BM_ClassNumber(benchmark::State& state)
{
    const std::int64_t D = -state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(quadforms::class_number(D));
}
BENCHMARK(BM_ClassNumber)->Arg(4 * 10007 - 9)->Arg(4 * 1000003 - 1);

static void BM_MaxCharSum(benchmark::State& state)
{
    const characters::CharacterHandle h(10007, 17, characters::CharacterMode::field_disc);
    for (auto _ : state) benchmark::DoNotOptimize(characters::max_char_sum(h, state.range(0)).value);
}
BENCHMARK(BM_MaxCharSum)->Arg(64)->Arg(4096);

static void BM_SieveLhs(benchmark::State& state)
{
    const sieve::SieveInstance inst(WindowSpec{1009, 8}, sieve::random_coefficients(state.range(0), 1));
    for (auto _ : state) benchmark::DoNotOptimize(sieve::sieve_lhs(inst));
}
BENCHMARK(BM_SieveLhs)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
