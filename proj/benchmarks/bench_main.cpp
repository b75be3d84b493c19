#include <benchmark/benchmark.h>

#include "ffnt/bertrand.hpp"
#include "ffnt/extension.hpp"
#include "ffnt/identity.hpp"
#include "ffnt/series.hpp"

using namespace ffnt;

static void BM_BigProductF(benchmark::State& state) {
    auto k = make_prime_field(2);
    unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(big_product_F(k, n));
    }
}
BENCHMARK(BM_BigProductF)->Arg(4)->Arg(5)->Arg(6);

static void BM_FastIrreducibilityTest(benchmark::State& state) {
    auto k = make_prime_field(2);
    unsigned d = static_cast<unsigned>(state.range(0));
    Poly f = find_irreducible(k, d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_irreducible_fast(f));
    }
}
BENCHMARK(BM_FastIrreducibilityTest)->Arg(8)->Arg(12)->Arg(16);

static void BM_CountMoebius(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_moebius(2, static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_CountMoebius)->Arg(12)->Arg(32)->Arg(64);

static void BM_ExtensionFieldMul(benchmark::State& state) {
    auto k = make_field(2, static_cast<unsigned>(state.range(0)));
    std::uint64_t q = k->size();
    Elem a = 1;
    for (auto _ : state) {
        a = k->mul(a % (q - 1) + 1, 3 % q);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_ExtensionFieldMul)->Arg(4)->Arg(8)->Arg(10);

static void BM_PostulateScan(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_postulate(static_cast<std::uint64_t>(state.range(0))));
    }
}
BENCHMARK(BM_PostulateScan)->Arg(10000)->Arg(100000);

static void BM_EulerProduct(benchmark::State& state) {
    auto census = IrreducibleCensus::from_moebius(2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(euler_product(census, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_EulerProduct)->Arg(12)->Arg(24);

BENCHMARK_MAIN();
