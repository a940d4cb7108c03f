// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "momsynth/atomic_rep.hpp"
#include "momsynth/seq_algebra.hpp"
#include "momsynth/synthesis.hpp"
#include "momsynth/verify.hpp"

using namespace momsynth;

namespace {

RationalSequence random_sequence(std::size_t n, unsigned d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return RationalSequence::generate(n, d, [&](const MultiIndex& alpha) {
        Rational re(num(rng), den(rng)), im(num(rng), den(rng));
        if (alpha.degree() == 0)
            re = 1;
        return ComplexRational(re, im);
    });
}

void BM_convolve_parallel(benchmark::State& state) {
    const auto s = random_sequence(3, static_cast<unsigned>(state.range(0)), 1);
    const auto t = random_sequence(3, static_cast<unsigned>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(convolve(s, t));
}

void BM_convolve_serial(benchmark::State& state) {
    const auto s = random_sequence(3, static_cast<unsigned>(state.range(0)), 1);
    const auto t = random_sequence(3, static_cast<unsigned>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::convolve_serial(s, t));
}

void BM_inverse_parallel(benchmark::State& state) {
    const auto s = random_sequence(3, static_cast<unsigned>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(inverse(s));
}

void BM_inverse_serial(benchmark::State& state) {
    const auto s = random_sequence(3, static_cast<unsigned>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::inverse_serial(s));
}

void BM_solve_parallel(benchmark::State& state) {
    const auto s = random_sequence(2, static_cast<unsigned>(state.range(0)), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_measure(s));
}

void BM_solve_serial(benchmark::State& state) {
    const auto s = random_sequence(2, static_cast<unsigned>(state.range(0)), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::solve_measure_serial(s));
}

const QuadratureConfig bench_quadrature{16, 2, 1e-8};

void BM_quadrature_parallel(benchmark::State& state) {
    const auto f = synthesize(random_sequence(2, static_cast<unsigned>(state.range(0)), 5), BoxKernel::unit(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_moments_quadrature(f, f.degree(), bench_quadrature));
}

void BM_quadrature_serial(benchmark::State& state) {
    const auto f = synthesize(random_sequence(2, static_cast<unsigned>(state.range(0)), 5), BoxKernel::unit(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::integrate_moments_quadrature_serial(f, f.degree(), bench_quadrature));
}

} // namespace

BENCHMARK(BM_convolve_parallel)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_convolve_serial)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_inverse_parallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_inverse_serial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_solve_parallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_solve_serial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_quadrature_parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_quadrature_serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
