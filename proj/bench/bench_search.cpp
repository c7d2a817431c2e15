#include "zsum/search.hpp"

#include <benchmark/benchmark.h>

using namespace zsum;

namespace {

const char* kGroups[] = {"C3^3", "C2^4", "C4^2", "C2xC2xC4"};

void run(benchmark::State& state, bool parallel) {
    const auto g = Group::parse(kGroups[state.range(0)]);
    const auto l = LengthSet::interval(static_cast<int>(state.range(1)));
    SearchConfig cfg;
    cfg.parallel_depth = parallel ? 3 : 0;
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        const auto r = parallel ? search_parallel(g, l, cfg) : search_serial(g, l, cfg);
        nodes = r.stats.nodes;
        benchmark::DoNotOptimize(r.value);
    }
    state.SetLabel(g.to_string() + " L=" + l.to_string());
    state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_serial(benchmark::State& s) { run(s, false); }
void BM_parallel(benchmark::State& s) { run(s, true); }

void args(benchmark::internal::Benchmark* b) {
    b->Args({0, 3})->Args({0, 4})->Args({1, 3})->Args({2, 4})->Args({3, 4})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_serial)->Apply(args);
BENCHMARK(BM_parallel)->Apply(args);
BENCHMARK_MAIN();
