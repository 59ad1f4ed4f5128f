#include <benchmark/benchmark.h>

#include "chtg/analysis.hpp"
#include "chtg/arithmetic.hpp"
#include "chtg/traces.hpp"

using namespace chtg;

namespace {

const TriangleParams kParams = from_radii(0.7, 0.8, 0.9).with_alpha(1.0);

Word word_of_length(std::int64_t n)
{
    std::vector<Letter> a;
    for (std::int64_t i = 0; i < n; ++i)
        a.push_back(static_cast<Letter>(1 + (i * i + i / 2) % 3));
    return Word(std::move(a));
}

void BM_TraceOracle(benchmark::State& state)
{
    const TriangleRealization tri = realize(kParams);
    const Word a = word_of_length(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(trace_oracle(a, tri));
}
BENCHMARK(BM_TraceOracle)->DenseRange(4, 20, 8);

void BM_TraceCombinatorial(benchmark::State& state)
{
    const Word a = word_of_length(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(trace_combinatorial(a, kParams));
}
BENCHMARK(BM_TraceCombinatorial)->DenseRange(4, 16, 4);

void BM_TraceRecursive(benchmark::State& state)
{
    const Word a = word_of_length(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(trace_recursive(a, kParams));
}
BENCHMARK(BM_TraceRecursive)->DenseRange(4, 16, 4);

void BM_ExactPolynomial(benchmark::State& state)
{
    const Word a = word_of_length(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(trace_polynomial_exact(a));
}
BENCHMARK(BM_ExactPolynomial)->DenseRange(4, 12, 4);

void BM_ScanElliptic(benchmark::State& state)
{
    const TriangleParams p = from_signature(Order::finite(4), Order::finite(4), Order::infinite()).with_cos_alpha(0.6);
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_elliptic(p, 10, {}, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_ScanElliptic)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_IntegerRingSweep(benchmark::State& state)
{
    const GroupWithRotation g = group_with_rotation(Order::finite(6), Order::finite(6), Order::infinite(), Order::finite(4));
    for (auto _ : state)
        benchmark::DoNotOptimize(integer_ring_sweep(g, 8));
}
BENCHMARK(BM_IntegerRingSweep)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
