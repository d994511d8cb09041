#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "modcluster/graph.hpp"
#include "modcluster/modularity.hpp"
#include "modcluster/rng.hpp"
#include "modcluster/search.hpp"
#include "modcluster/solvers.hpp"
#include "modcluster/statevector.hpp"
#include "modcluster/subproblem.hpp"

namespace {

using namespace modcluster;

Graph random_graph(int n, double density, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double draw = static_cast<double>(gen() >> 11) * 0x1.0p-53;
            if (draw < density) edges.emplace_back(u, v);
        }
    }
    if (edges.empty()) edges.emplace_back(0, 1);
    return Graph::from_edges(n, std::move(edges));
}

Partition random_partition(int n, std::uint64_t seed) {
    Rng rng(seed);
    Partition p;
    p.spins.resize(static_cast<std::size_t>(n));
    for (auto& s : p.spins) s = rng.spin();
    return p;
}

void BM_Modularity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_graph(n, 0.05, 7);
    const Partition p = random_partition(n, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(modularity(g, p));
    }
}
BENCHMARK(BM_Modularity)->Arg(100)->Arg(1000)->Arg(10000);

void BM_AllGains(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_graph(n, 0.05, 7);
    const Partition p = random_partition(n, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(all_gains(g, p));
    }
}
BENCHMARK(BM_AllGains)->Arg(100)->Arg(1000)->Arg(10000);

void BM_BuildSubproblem(benchmark::State& state) {
    const int n = 2000;
    const Graph g = random_graph(n, 0.01, 7);
    const Partition p = random_partition(n, 11);
    const auto subset = select_subset(g, p, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_subproblem(g, p, subset));
    }
}
BENCHMARK(BM_BuildSubproblem)->Arg(25)->Arg(100);

void BM_SolveExact(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Graph g = random_graph(64, 0.2, 7);
    const Partition p = random_partition(64, 11);
    const auto sp = build_subproblem(g, p, select_subset(g, p, k));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_exact(sp));
    }
}
BENCHMARK(BM_SolveExact)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_SolveAnneal(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Graph g = random_graph(256, 0.05, 7);
    const Partition p = random_partition(256, 11);
    const auto sp = build_subproblem(g, p, select_subset(g, p, k));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_anneal(sp, AnnealConfig{}, seed++));
    }
}
BENCHMARK(BM_SolveAnneal)->Arg(25)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_QaoaLayer(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Graph g = random_graph(64, 0.2, 7);
    const Partition p = random_partition(64, 11);
    const auto sp = build_subproblem(g, p, select_subset(g, p, k));
    const auto cost = basis_cost_table(sp);
    Statevector sv = Statevector::uniform_plus(k);
    for (auto _ : state) {
        sv.apply_cost_phase(cost, 0.3);
        sv.apply_mixer(0.2);
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_QaoaLayer)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_LocalSearchExact(benchmark::State& state) {
    const Graph g = random_graph(200, 0.04, 7);
    SearchConfig cfg;
    cfg.backend = Backend::Exact;
    cfg.subproblem_size = 16;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        benchmark::DoNotOptimize(run_local_search(g, cfg));
    }
}
BENCHMARK(BM_LocalSearchExact)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
