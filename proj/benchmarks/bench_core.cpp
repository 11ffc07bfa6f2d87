#include <benchmark/benchmark.h>

#include <complex>

#include <argonaut/argument.hpp>
#include <argonaut/explicit_formula.hpp>
#include <argonaut/extremal.hpp>
#include <argonaut/lfunction.hpp>
#include <argonaut/special_functions.hpp>
#include <argonaut/zeros.hpp>

using namespace argonaut;

namespace {

const LFunctionDescriptor& zeta() {
    static const LFunctionDescriptor d = zeta_descriptor();
    return d;
}

void bm_evaluate_l(benchmark::State& state) {
    const Complex s(0.5, 30.0);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_l(zeta(), s));
}
BENCHMARK(bm_evaluate_l);

void bm_hurwitz_zeta(benchmark::State& state) {
    const Complex s(0.5, 100.0);
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz_zeta(s, 0.5));
}
BENCHMARK(bm_hurwitz_zeta);

void bm_hardy_function(benchmark::State& state) {
    double t = 14.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hardy_function(zeta(), t));
        t += 1e-6;  // defeat value caching without changing the regime
    }
}
BENCHMARK(bm_hardy_function);

void bm_compute_s(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(compute_s(zeta(), 15.0).value);
}
BENCHMARK(bm_compute_s);

void bm_compute_s1(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(compute_s1(zeta(), 30.0).value);
}
BENCHMARK(bm_compute_s1);

void bm_prime_side(benchmark::State& state) {
    const TestFunction h = TestFunction::fejer(1.0, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(prime_side_sum(zeta(), h).value);
}
BENCHMARK(bm_prime_side);

void bm_archimedean_term(benchmark::State& state) {
    const TestFunction h = TestFunction::fejer(1.0, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(archimedean_term(h, Complex(0.0, 0.0)).value);
}
BENCHMARK(bm_archimedean_term);

void bm_zero_scan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(find_zeros(zeta(), 50.0).size());
}
BENCHMARK(bm_zero_scan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
