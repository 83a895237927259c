#include <benchmark/benchmark.h>

#include "cores/cores.hpp"
#include "cores/toolkit/sampling.hpp"

namespace {

using namespace cores;

void BM_Enumerate(benchmark::State& state) {
    const std::int64_t s = state.range(0);
    const std::int64_t t = state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_st_cores(s, t));
    state.counters["cores"] = static_cast<double>(anderson_count(s, t));
}
BENCHMARK(BM_Enumerate)->Args({3, 4})->Args({5, 7})->Args({7, 9})->Args({9, 10})->Unit(benchmark::kMillisecond);

void BM_Descent(benchmark::State& state) {
    sampling::Rng rng(2);
    std::vector<Partition> corpus;
    for (int n = 0; n < 64; ++n) corpus.push_back(sampling::random_s_core(rng, 5, state.range(0)));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(descend_to_t_core(corpus[i++ % corpus.size()], 5, 7));
}
BENCHMARK(BM_Descent)->Arg(50)->Arg(200)->Arg(800);

void BM_Chain(benchmark::State& state) {
    const std::int64_t s = state.range(0);
    const std::int64_t t = s + 1;
    for (auto _ : state) benchmark::DoNotOptimize(containment_chain(origin(s), s, t));
}
BENCHMARK(BM_Chain)->DenseRange(3, 8);

}  // namespace

BENCHMARK_MAIN();
