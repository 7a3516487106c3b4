#include <benchmark/benchmark.h>

#include "cyclelab/generators.hpp"
#include "cyclelab/oracle.hpp"
#include "cyclelab/regularity.hpp"
#include "cyclelab/expander.hpp"

using namespace cyclelab;

static void BM_SampleGnp(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        RngStream rng(7, static_cast<std::uint64_t>(state.iterations()));
        benchmark::DoNotOptimize(sample_gnp(n, 20.0 / n, rng));
    }
}
BENCHMARK(BM_SampleGnp)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_CycleSpectrum(benchmark::State& state) {
    RngStream rng(9, 0);
    Graph g = sample_gnp(static_cast<int>(state.range(0)), 0.4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(cycle_spectrum_exact(g));
}
BENCHMARK(BM_CycleSpectrum)->Arg(10)->Arg(12)->Arg(14);

static void BM_EpsProperty(benchmark::State& state) {
    RngStream rng(11, 0);
    int m = static_cast<int>(state.range(0));
    std::vector<Edge> edges;
    RngStream er(12, 0);
    for (int u = 0; u < m; ++u)
        for (int v = m; v < 2 * m; ++v)
            if (er.unit() < 0.3) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(2 * m, std::move(edges));
    VertexSet left, right;
    for (int i = 0; i < m; ++i) left.push_back(i);
    for (int i = m; i < 2 * m; ++i) right.push_back(i);
    for (auto _ : state) {
        RngStream r(13, static_cast<std::uint64_t>(state.iterations()));
        benchmark::DoNotOptimize(check_eps_property(g, left, right, Rational(1, 20), Rational(m),
                                                    VerdictMode::Sampled, 64, r));
    }
}
BENCHMARK(BM_EpsProperty)->Arg(100)->Arg(400);

static void BM_DfsPartition(benchmark::State& state) {
    RngStream rng(15, 0);
    Graph g = sample_gnp(static_cast<int>(state.range(0)), 10.0 / state.range(0), rng);
    for (auto _ : state) benchmark::DoNotOptimize(dfs_path_partition(g));
}
BENCHMARK(BM_DfsPartition)->Arg(1000)->Arg(10000);
