// Serial reference vs OpenMP sweep on a small grid, plus the hot kernels underneath.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "dmop/algorithms.hpp"
#include "dmop/harness.hpp"
#include "dmop/metrics.hpp"

namespace {

dmop::SweepSpec bench_spec()
{
    dmop::SweepSpec s;
    s.problems = {dmop::ProblemId::dMOP2};
    s.algorithms = {dmop::AlgorithmId::NSGA2, dmop::AlgorithmId::MOEAD};
    s.responses = {dmop::ResponseId::DR0, dmop::ResponseId::DR1};
    s.severities = {0.1, 0.5};
    s.frequencies = {2, 5};
    s.repeats = 2;
    s.num_changes = 10;
    return s;
}

void BM_SweepSerial(benchmark::State& state)
{
    const auto spec = bench_spec();
    for (auto _ : state) {
        benchmark::DoNotOptimize(dmop::run_sweep_serial(spec));
    }
    state.counters["runs"] = static_cast<double>(spec.total_runs());
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SweepParallel(benchmark::State& state)
{
    const auto spec = bench_spec();
    const auto threads = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dmop::run_sweep(spec, threads));
    }
    state.counters["runs"] = static_cast<double>(spec.total_runs());
}
BENCHMARK(BM_SweepParallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Generation(benchmark::State& state)
{
    const auto id = static_cast<dmop::AlgorithmId>(state.range(0));
    const auto prob = dmop::make_problem(dmop::ProblemId::dMOP1);
    auto alg = dmop::make_algorithm(id, prob, 0.0, 100, {}, dmop::RandomSource(1));
    for (auto _ : state) {
        alg->step(prob, 0.0);
    }
    state.SetLabel(std::string(dmop::to_string(id)));
}
BENCHMARK(BM_Generation)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_OptimalHypervolume(benchmark::State& state)
{
    const auto prob = dmop::make_problem(dmop::ProblemId::HE1);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dmop::optimal_hypervolume(prob, t, 100, dmop::kDefaultReference));
        t += 0.01;
    }
}
BENCHMARK(BM_OptimalHypervolume)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
