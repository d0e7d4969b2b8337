#include <benchmark/benchmark.h>

#include "closedlab/closed.hpp"
#include "closedlab/constants.hpp"
#include "closedlab/fibonacci.hpp"
#include "closedlab/words.hpp"

using namespace closedlab;

static void BM_CounterFibonacciPrefix(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    Word prefix = generate_prefix(FamilySpec::fibonacci(), len);
    for (auto _ : state) {
        ClosedFactorCounter counter(2, len);
        counter.push_all(prefix);
        benchmark::DoNotOptimize(counter.current().total);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(len));
}
BENCHMARK(BM_CounterFibonacciPrefix)->Range(1 << 10, 1 << 16);

static void BM_CounterThueMorsePrefix(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    Word prefix = generate_prefix(FamilySpec::preset(FamilyKind::ThueMorse), len);
    for (auto _ : state) {
        ClosedFactorCounter counter(2, len);
        counter.push_all(prefix);
        benchmark::DoNotOptimize(counter.current().total);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(len));
}
BENCHMARK(BM_CounterThueMorsePrefix)->Range(1 << 10, 1 << 14);

static void BM_EnumerationOracle(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    Word prefix = generate_prefix(FamilySpec::fibonacci(), len);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_closed_factors(prefix, len).total);
    }
}
BENCHMARK(BM_EnumerationOracle)->Range(64, 1024);

static void BM_MinimaRun(benchmark::State& state) {
    const auto limit = static_cast<std::size_t>(state.range(0));
    ScanOptions opts;
    opts.jobs = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_closed_run(limit, opts).back().m);
    }
}
BENCHMARK(BM_MinimaRun)->Arg(50)->Arg(100)->Arg(200);

static void BM_EmpiricalScan(benchmark::State& state) {
    const auto max_len = static_cast<std::size_t>(state.range(0));
    ConstantScanOptions opts;
    opts.jobs = 1;
    for (auto _ : state) {
        auto report = empirical_constant(FamilySpec::fibonacci(), max_len, opts);
        benchmark::DoNotOptimize(report.empirical_inf.num());
    }
}
BENCHMARK(BM_EmpiricalScan)->Arg(100)->Arg(300);

static void BM_MaxExponent(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    Word prefix = generate_prefix(FamilySpec::fibonacci(), len);
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_exponent(prefix).num());
    }
}
BENCHMARK(BM_MaxExponent)->Range(256, 4096);

BENCHMARK_MAIN();
