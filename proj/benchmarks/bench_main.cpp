#include <benchmark/benchmark.h>

#include "awgraph/ap.hpp"
#include "awgraph/catalog.hpp"
#include "awgraph/graph.hpp"

using namespace awgraph;

static void BM_AwPathProduct(benchmark::State& state) {
    const auto m = static_cast<int>(state.range(0));
    const auto n = static_cast<int>(state.range(1));
    const Graph g = cartesian_product(path_graph(m), path_graph(n)).composite();
    for (auto _ : state) {
        auto r = aw(g, 3);
        benchmark::DoNotOptimize(r.aw);
        state.counters["nodes"] = static_cast<double>(r.stats.nodes);
    }
}
BENCHMARK(BM_AwPathProduct)->Args({3, 4})->Args({4, 4})->Args({5, 5})->Args({6, 6})->Unit(benchmark::kMillisecond);

static void BM_EnumerateAps(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const Graph g = cartesian_product(path_graph(n), cycle_graph(n)).composite();
    for (auto _ : state) {
        auto aps = enumerate_k_aps(g, 3);
        benchmark::DoNotOptimize(aps.data());
        state.counters["aps"] = static_cast<double>(aps.size());
    }
}
BENCHMARK(BM_EnumerateAps)->Arg(4)->Arg(6)->Arg(8);

static void BM_EnumerateTrees(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto trees = enumerate_trees(n);
        benchmark::DoNotOptimize(trees.data());
    }
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_EnumerateGraphs(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto graphs = enumerate_connected_graphs(n);
        benchmark::DoNotOptimize(graphs.data());
    }
}
BENCHMARK(BM_EnumerateGraphs)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
