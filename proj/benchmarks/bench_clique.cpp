#include <benchmark/benchmark.h>

#include "specclique/generators.hpp"
#include "specclique/oracle.hpp"

using namespace specclique;

static void BM_MaxCliqueCirculant(benchmark::State& state) {
    Graph g = generate("circulant:16:1,2,3,4");
    for (auto _ : state) benchmark::DoNotOptimize(max_clique_exact(g));
}
BENCHMARK(BM_MaxCliqueCirculant);

static void BM_MaxCliqueFoldedCubeComplement(benchmark::State& state) {
    Graph g = complement(generate("foldedcube:" + std::to_string(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(max_clique_exact(g));
}
BENCHMARK(BM_MaxCliqueFoldedCubeComplement)->Arg(5)->Arg(6);

static void BM_Chromatic(benchmark::State& state) {
    Graph g = generate("circulant:16:1,2,3,4");
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number_exact(g));
}
BENCHMARK(BM_Chromatic);

static void BM_TriangleFree(benchmark::State& state) {
    Graph g = generate("gcd:146:1,2");
    for (auto _ : state) benchmark::DoNotOptimize(is_triangle_free(g));
}
BENCHMARK(BM_TriangleFree);
