#include "sfq/counting.hpp"

#include <benchmark/benchmark.h>

using namespace sfq;

namespace {

const Partition shape({4, 4, 2, 2});

void BM_BruteForce(benchmark::State& st) {
    auto f = make_field(static_cast<std::uint32_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(brute_force_distribution(shape, f, Basis::H));
}

void BM_Fast(benchmark::State& st) {
    auto f = make_field(static_cast<std::uint32_t>(st.range(0)));
    const CountConfig cfg{static_cast<int>(st.range(1)), 1e12};
    for (auto _ : st) benchmark::DoNotOptimize(fast_distribution(shape, f, Basis::H, cfg));
}

void BM_Joint(benchmark::State& st) {
    auto f = make_field(static_cast<std::uint32_t>(st.range(0)));
    const CountConfig cfg{static_cast<int>(st.range(1)), 1e12};
    const JointCountSpec spec{{rectangle(3, 3), rectangle(2, 2), rectangle(1, 1)}, {f->zero(), f->zero(), f->zero()}};
    for (auto _ : st) benchmark::DoNotOptimize(joint_distribution(spec, f, cfg));
}

} // namespace

BENCHMARK(BM_BruteForce)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fast)->ArgsProduct({{2, 3, 5}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Joint)->ArgsProduct({{3, 5}, {1, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
