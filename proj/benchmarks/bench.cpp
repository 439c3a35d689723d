#include <benchmark/benchmark.h>

#include "autoplex/constructions.hpp"
#include "autoplex/repetitions.hpp"
#include "autoplex/search.hpp"
#include "autoplex/words.hpp"

using namespace autoplex;

static void BM_KbonacciWord(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(kbonacci_word(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_KbonacciWord)->Arg(10)->Arg(20)->Arg(30);

static void BM_CriticalExponent(benchmark::State& state) {
    Word w = infinite_prefix(2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(critical_exponent(w));
}
BENCHMARK(BM_CriticalExponent)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_AnLower(benchmark::State& state) {
    Word w = kbonacci_word(3, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(an_lower(w));
}
BENCHMARK(BM_AnLower)->Arg(8)->Arg(9)->Arg(10);

static void BM_AnExact(benchmark::State& state) {
    Word w = kbonacci_word(3, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(an_exact(w).value);
}
BENCHMARK(BM_AnExact)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_WalkCount(benchmark::State& state) {
    ComplexityRecord rec = tribonacci_witness(7);
    Nfa a = induce_from_sequence(*rec.witness);
    Word w = kbonacci_word(3, 10);
    for (auto _ : state) benchmark::DoNotOptimize(spells_word(a, w));
}
BENCHMARK(BM_WalkCount);

static void BM_TribonacciWitness(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(tribonacci_witness(static_cast<int>(state.range(0))).value);
}
BENCHMARK(BM_TribonacciWitness)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
