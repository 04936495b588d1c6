#include <benchmark/benchmark.h>

#include <wallcross/formulas.hpp>
#include <wallcross/pyramid_kernels.hpp>
#include <wallcross/series_kernels.hpp>

namespace
{

using namespace wallcross;

// Two dense operands on a square box.
std::pair<BiSeries, BiSeries> operands(std::int64_t n)
{
    const TruncationBox box{n, n};
    return {evaluate({FormulaKind::macmahon_sq}, box), evaluate({FormulaKind::zpt_y}, box)};
}

void BM_mul_serial(benchmark::State &state)
{
    const auto [a, b] = operands(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::mul_serial(a, b));
    }
}

void BM_mul_parallel(benchmark::State &state)
{
    const auto [a, b] = operands(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::mul_parallel(a, b));
    }
}

BENCHMARK(BM_mul_serial)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_mul_parallel)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

EnumerationLimits pyramid_limits(std::int64_t cap)
{
    return {{cap, cap}, cap};
}

void BM_ideals_serial(benchmark::State &state)
{
    const ErcSpec spec(ErcKind::infinite_pyramid, 1);
    const auto limits = pyramid_limits(state.range(0));
    const auto poset = kernels::build_poset(spec, limits);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::count_ideals_serial(poset, limits));
    }
}

void BM_ideals_parallel(benchmark::State &state)
{
    const ErcSpec spec(ErcKind::infinite_pyramid, 1);
    const auto limits = pyramid_limits(state.range(0));
    const auto poset = kernels::build_poset(spec, limits);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::count_ideals_parallel(poset, limits));
    }
}

BENCHMARK(BM_ideals_serial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ideals_parallel)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
