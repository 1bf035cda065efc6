// Serial reference kernels against their OpenMP counterparts.
#include "bkf/height.hpp"
#include "bkf/qcomb.hpp"

#include <benchmark/benchmark.h>

using namespace bkf;

namespace {

void lusztig(benchmark::State& state, const char* type, int rank, Weight mu, Execution ex) {
    RootSystem r = build_root_system(type, rank);
    auto group = enumerate_weyl_group(r);
    for (auto _ : state)
        benchmark::DoNotOptimize(lusztig_q_analog(r, group, mu, Weight::zero(rank), ParabolicSubset::borel(), ex));
}

void cht_zero_count(benchmark::State& state, Execution ex) {
    RootSystem r = build_root_system("F4", 4);
    std::vector<Weight> box;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d) box.push_back(Weight({a, b, c, d}));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::count(box.size(), [&](std::size_t i) { return cht(r, box[i]) == 0; }, ex));
}

}  // namespace

BENCHMARK_CAPTURE(lusztig, b3_serial, "B", 3, Weight({2, 1, 2}), Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(lusztig, b3_parallel, "B", 3, Weight({2, 1, 2}), Execution::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(lusztig, f4_serial, "F4", 4, Weight({1, 0, 0, 1}), Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(lusztig, f4_parallel, "F4", 4, Weight({1, 0, 0, 1}), Execution::Parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(cht_zero_count, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(cht_zero_count, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
