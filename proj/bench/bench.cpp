// Serial reference vs production kernels. Build with -DGROVERIAN_BENCH=ON.

#include <benchmark/benchmark.h>

#include <cmath>

#include "groverian/closed_form.hpp"
#include "groverian/optimize.hpp"
#include "groverian/rng.hpp"

using namespace groverian;

namespace {

StateVector random_real_state(int n, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<complex> amps(std::size_t{1} << n);
    double nrm = 0.0;
    for (auto& a : amps) {
        a = complex{rng.gaussian(), 0.0};
        nrm += std::norm(a);
    }
    nrm = std::sqrt(nrm);
    for (auto& a : amps)
        a /= nrm;
    return StateVector(n, std::move(amps));
}

void closed_form_reference(benchmark::State& state)
{
    StateVector s = random_real_state(static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::closed_form_pmax(s));
}

void closed_form_transform(benchmark::State& state)
{
    StateVector s = random_real_state(static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(closed_form_pmax(s).p_max);
}

void grid_reference_scan(benchmark::State& state)
{
    StateVector s = random_real_state(3, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::grid_scan(s, static_cast<int>(state.range(0))));
}

void grid_folded_parallel(benchmark::State& state)
{
    StateVector s = random_real_state(3, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(grid_pmax(s, static_cast<int>(state.range(0))).p_max);
}

void numeric_serial(benchmark::State& state)
{
    StateVector s = random_real_state(5, 3);
    NumericConfig cfg;
    cfg.starts = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::numeric_pmax(s, cfg).p_max);
}

void numeric_parallel(benchmark::State& state)
{
    StateVector s = random_real_state(5, 3);
    NumericConfig cfg;
    cfg.starts = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(numeric_pmax(s, cfg).p_max);
}

} // namespace

BENCHMARK(closed_form_reference)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(closed_form_transform)->Arg(8)->Arg(10)->Arg(12)->Arg(16);
BENCHMARK(grid_reference_scan)->Arg(61)->Arg(121)->Arg(181);
BENCHMARK(grid_folded_parallel)->Arg(61)->Arg(121)->Arg(181);
BENCHMARK(numeric_serial)->Arg(32)->Arg(128);
BENCHMARK(numeric_parallel)->Arg(32)->Arg(128);

BENCHMARK_MAIN();
