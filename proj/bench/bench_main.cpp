// Serial reference versus OpenMP kernels.

#include <random>

#include <benchmark/benchmark.h>

#include "schubcalc/ddo.hpp"
#include "schubcalc/grass.hpp"
#include "schubcalc/hecke.hpp"

using namespace schubcalc;

namespace {

Poly dense(int nvars, int terms, int deg, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Poly f(nvars);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int left = deg;
        for (int i = 0; i < nvars && left > 0; ++i) {
            const int e = static_cast<int>(rng() % static_cast<unsigned>(left + 1));
            m.x[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
            left -= e;
        }
        f.add_term(m, mpz_class(static_cast<long>(rng() % 1001) - 500));
    }
    return f;
}

void BM_MulSerial(benchmark::State& state) {
    const int terms = static_cast<int>(state.range(0));
    const Poly f = dense(6, terms, 8, 1);
    const Poly g = dense(6, terms, 8, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mul_serial(f, g));
}

void BM_MulParallel(benchmark::State& state) {
    const int terms = static_cast<int>(state.range(0));
    const Poly f = dense(6, terms, 8, 1);
    const Poly g = dense(6, terms, 8, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mul_parallel(f, g));
}

void BM_FkSweep(benchmark::State& state) {
    const int threads = static_cast<int>(state.range(0));
    const FglSpec spec(FglKind::hyperbolic);
    for (auto _ : state) benchmark::DoNotOptimize(verify_coeff_corollary(spec, 4, {threads}));
}

void BM_TwistedBraid(benchmark::State& state) {
    const int threads = static_cast<int>(state.range(0));
    const OperatorContext ctx(FglSpec(FglKind::hyperbolic), 4);
    for (auto _ : state) benchmark::DoNotOptimize(twisted_braid_check(ctx, 1, 200, 42, threads));
}

void BM_ChowK(benchmark::State& state) {
    const int threads = static_cast<int>(state.range(0));
    const FglSpec spec(FglKind::multiplicative);
    for (auto _ : state) benchmark::DoNotOptimize(chow_k_cross_check(2, 5, spec, threads));
}

}  // namespace

BENCHMARK(BM_MulSerial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FkSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwistedBraid)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChowK)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
