// Serial reference vs OpenMP kernels. Thread count follows CHROTOP_THREADS.

#include <chrotop/certificates.hpp>
#include <chrotop/protocol.hpp>
#include <chrotop/search.hpp>
#include <chrotop/time_complex.hpp>

#include <benchmark/benchmark.h>

using namespace chrotop;

namespace {

void executions_serial(benchmark::State & state)
{
    auto t = set_agreement(3);
    auto depth = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_executions_serial(iis_model(3), t.inputs, depth));
}

void executions_parallel(benchmark::State & state)
{
    auto t = set_agreement(3);
    auto depth = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_executions(iis_model(3), t.inputs, depth));
}

void run_serial_kernel(benchmark::State & state)
{
    auto t = inputless_consensus(2);
    auto p = own_input_protocol();
    auto depth = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_serial(*p, iis_model(2), t.inputs, depth));
}

void run_parallel_kernel(benchmark::State & state)
{
    auto t = inputless_consensus(2);
    auto p = own_input_protocol();
    auto depth = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(run(*p, iis_model(2), t.inputs, depth));
}

void search_kernel(benchmark::State & state, bool parallel)
{
    auto t = inputless_consensus(2);
    auto PT = build_time_T(m1_model(), t, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(search_decision_map(PT, t, SearchOptions{2'000'000, parallel}));
}

void search_serial(benchmark::State & state)
{
    search_kernel(state, false);
}

void search_parallel(benchmark::State & state)
{
    search_kernel(state, true);
}

void sperner_serial(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(sperner_evidence_serial(3, 1));
}

void sperner_parallel(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(sperner_evidence(3, 1));
}

}

BENCHMARK(executions_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(executions_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(run_serial_kernel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(run_parallel_kernel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(search_serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(search_parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(sperner_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(sperner_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
