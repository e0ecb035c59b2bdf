#include "hankelkit/class_maps.hpp"
#include "hankelkit/functionals.hpp"
#include "hankelkit/optimizer.hpp"
#include "hankelkit/proof_trace.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <span>
#include <vector>

using namespace hankelkit;

namespace {

// One objective evaluation: decode the parameters, run the class map, take
// the functional's modulus. This is the inner loop of every search.
void BM_ObjectiveChart(benchmark::State& state) {
    const SearchModel model = SearchModel::lz();
    const std::vector<double> p = {1.3, 0.7, 0.4, 2.1, 0.9, 3.3};
    for (auto _ : state) {
        const CSequence cs = model_cseq(model, p, 3);
        const auto a =
            coeffs_for_class<Complex>(FunctionClass::Convex, std::span<const Complex>(cs.c), 4, false);
        double v = std::abs(evaluate_functional(Functional::T_a2a3_a4, a));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ObjectiveChart);

void BM_ObjectiveMeasure(benchmark::State& state) {
    const SearchModel model = SearchModel::herglotz(4);
    const std::vector<double> p = {0.3, 0.2, 0.4, 0.1, 0.5, 2.2, 4.0, 5.5};
    for (auto _ : state) {
        const CSequence cs = model_cseq(model, p, 4);
        const auto a =
            coeffs_for_class<Complex>(FunctionClass::Starlike, std::span<const Complex>(cs.c), 5, false);
        double v = std::abs(evaluate_functional(Functional::H3_1, a));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ObjectiveMeasure);

void BM_AuditChartSmallGrid(benchmark::State& state) {
    SearchConfig cfg;
    cfg.model = SearchModel::lz();
    cfg.grid_points_per_axis = static_cast<int>(state.range(0));
    cfg.restarts = 2;
    for (auto _ : state) {
        BoundReport r = audit_class(FunctionClass::Starlike, Functional::T_a2a3_a4, cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_AuditChartSmallGrid)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_ReducedScan(benchmark::State& state) {
    const ReductionCase rc = ReductionCase::for_class(FunctionClass::BoundedTurning);
    for (auto _ : state) {
        ReducedMax r = reduced_max(rc, 1e-6, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ReducedScan)->Arg(201)->Arg(801)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
