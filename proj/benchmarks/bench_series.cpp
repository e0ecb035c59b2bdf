#include "hankelkit/class_maps.hpp"
#include "hankelkit/extremal.hpp"
#include "hankelkit/functionals.hpp"
#include "hankelkit/series.hpp"

#include <benchmark/benchmark.h>

using namespace hankelkit;

namespace {

SeriesC dense_complex(int order, double re, double im) {
    SeriesC s(order);
    for (int k = 0; k <= order; ++k)
        s[k] = Complex(re / (k + 1.0), im * (k % 3 == 0 ? 1.0 : -0.5));
    return s;
}

void BM_SeriesMulComplex(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const SeriesC a = dense_complex(order, 1.0, 0.25);
    const SeriesC b = dense_complex(order, 0.5, -0.125);
    for (auto _ : state) {
        SeriesC r = series::mul(a, b);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SeriesMulComplex)->Arg(16)->Arg(64);

void BM_SeriesExpRational(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    SeriesQ a(order);
    for (int k = 1; k <= order; ++k) a[k] = Rational(2, k);
    for (auto _ : state) {
        SeriesQ r = series::exp_series(a);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SeriesExpRational)->Arg(12)->Arg(24);

void BM_OdeCoeffsComplex(benchmark::State& state) {
    SeriesC p(7);
    p[0] = Complex(1.0, 0.0);
    for (int k = 1; k <= 7; ++k) p[k] = Complex(1.5 / k, 0.3);
    for (auto _ : state) {
        CoeffSeqC r = ode_coeffs<Complex>(FunctionClass::Convex, p, 8);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_OdeCoeffsComplex);

void BM_ExtremalExpansionExact(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const ExtremalSpec spec = ExtremalSpec::paper(FunctionClass::Convex);
    for (auto _ : state) {
        ExtremalExpansion e = extremal_expansion(spec, order);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_ExtremalExpansionExact)->Arg(12)->Arg(32);

void BM_HankelDetComplex(benchmark::State& state) {
    CoeffSeqC a;
    a.a = {Complex(1, 0), Complex(0.4, 0.2), Complex(-0.3, 0.1), Complex(0.2, -0.5), Complex(0.05, 0.6)};
    for (auto _ : state) {
        Complex v = hankel_det(a, 3, 1);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_HankelDetComplex);

}  // namespace

BENCHMARK_MAIN();
