#include <benchmark/benchmark.h>

#include "specclique/generators.hpp"
#include "specclique/spectral.hpp"

using namespace specclique;

static void BM_Eigenvalues(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = generate("circulant:" + std::to_string(n) + ":1,2,3,4");
    for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_symmetric(g));
    state.SetComplexityN(n);
}
BENCHMARK(BM_Eigenvalues)->Arg(32)->Arg(64)->Arg(128)->Arg(256)->Complexity();

static void BM_SpectralSummaryKneser(benchmark::State& state) {
    Graph g = generate("kneser:9:3");  // n = 84
    for (auto _ : state) benchmark::DoNotOptimize(spectral_summary(g));
}
BENCHMARK(BM_SpectralSummaryKneser);

static void BM_WalkCount(benchmark::State& state) {
    Graph g = generate("gcd:146:1,2");
    for (auto _ : state) benchmark::DoNotOptimize(walk_count(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WalkCount)->Arg(3)->Arg(8);
