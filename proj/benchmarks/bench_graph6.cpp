#include <benchmark/benchmark.h>

#include <random>

#include "specclique/graph6.hpp"

using namespace specclique;

namespace {

Graph dense_random(int n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution edge(0.5);
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (edge(rng)) g.add_edge(a, b);
    return g;
}

}  // namespace

static void BM_WriteGraph6(benchmark::State& state) {
    Graph g = dense_random(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(write_graph6(g));
}
BENCHMARK(BM_WriteGraph6)->Arg(50)->Arg(200);

static void BM_ParseGraph6(benchmark::State& state) {
    std::string line = write_graph6(dense_random(static_cast<int>(state.range(0)), 2));
    for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(line));
}
BENCHMARK(BM_ParseGraph6)->Arg(50)->Arg(200);
