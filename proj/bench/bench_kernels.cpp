// Serial reference kernels vs the OpenMP versions.
//   ./bench_kernels --benchmark_filter=Iterate

#include <benchmark/benchmark.h>

#include "grovent/statevector.hpp"

using namespace grovent;

namespace {

const std::vector<Pattern> kMarked{0, 1, 12345};

void BM_IterateParallel(benchmark::State& st)
{
    auto s = uniform_state(static_cast<int>(st.range(0)));
    for (auto _ : st) {
        apply_grover_iterate(s, kMarked);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(s.size()));
}

void BM_IterateSerial(benchmark::State& st)
{
    auto s = uniform_state(static_cast<int>(st.range(0)));
    for (auto _ : st) {
        serial::apply_grover_iterate(s, kMarked);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(s.size()));
}

void BM_OverlapParallel(benchmark::State& st)
{
    const auto s = run(static_cast<int>(st.range(0)), kMarked, 3);
    for (auto _ : st) benchmark::DoNotOptimize(dense_overlap(s, 1.1));
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(s.size()));
}

void BM_OverlapSerial(benchmark::State& st)
{
    const auto s = run(static_cast<int>(st.range(0)), kMarked, 3);
    for (auto _ : st) benchmark::DoNotOptimize(serial::dense_overlap(s, 1.1));
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(s.size()));
}

}  // namespace

BENCHMARK(BM_IterateSerial)->DenseRange(14, 22, 4);
BENCHMARK(BM_IterateParallel)->DenseRange(14, 22, 4);
BENCHMARK(BM_OverlapSerial)->DenseRange(14, 22, 4);
BENCHMARK(BM_OverlapParallel)->DenseRange(14, 22, 4);

BENCHMARK_MAIN();
