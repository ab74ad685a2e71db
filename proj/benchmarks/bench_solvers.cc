#include <rolecol/cnf.hh>
#include <rolecol/cograph_solver.hh>
#include <rolecol/oracle.hh>
#include <rolecol/path_solver.hh>
#include <rolecol/sat_reduction.hh>
#include <rolecol/tree_solver.hh>

#include <benchmark/benchmark.h>

#include <random>

using namespace rolecol;

namespace
{
    auto random_tree(int n, std::uint64_t seed) -> Graph
    {
        std::mt19937_64 rng{seed};
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<int> sequence(n - 2);
        for (auto & x : sequence)
            x = pick(rng);
        return decode_pruefer(sequence);
    }

    // balanced alternation of joins and unions over n vertices
    auto layered_cograph(int n) -> Graph
    {
        Graph g = empty_graph(1);
        bool use_join = true;
        while (g.size() < n) {
            g = use_join ? join(g, empty_graph(1)) : disjoint_union(g, complete_graph(std::min(2, n - g.size())));
            use_join = ! use_join;
        }
        return g;
    }
}

static auto bm_oracle_path(benchmark::State & state) -> void
{
    auto g = path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_exact(g, 3));
}
BENCHMARK(bm_oracle_path)->DenseRange(6, 12, 2);

static auto bm_path_solver(benchmark::State & state) -> void
{
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(colour_path(n, 7));
}
BENCHMARK(bm_path_solver)->Range(64, 1 << 16);

static auto bm_tree_constant_k(benchmark::State & state) -> void
{
    auto t = random_tree(static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_tree_constant_k(t, 3));
}
BENCHMARK(bm_tree_constant_k)->RangeMultiplier(4)->Range(16, 1024);

static auto bm_tree_constant_surplus(benchmark::State & state) -> void
{
    int n = static_cast<int>(state.range(0));
    auto t = random_tree(n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_tree_constant_surplus(t, n - 2));
}
BENCHMARK(bm_tree_constant_surplus)->RangeMultiplier(4)->Range(16, 1024);

static auto bm_cograph_k(benchmark::State & state) -> void
{
    auto g = layered_cograph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(k_role_colour(g, 3));
}
BENCHMARK(bm_cograph_k)->RangeMultiplier(4)->Range(16, 256);

static auto bm_reduction_build(benchmark::State & state) -> void
{
    int clauses = static_cast<int>(state.range(0));
    CnfFormula f{clauses, {}};
    for (int j = 0; j < clauses; ++j)
        f.clauses.push_back({j + 1, -((j + 1) % clauses + 1)});
    for (auto _ : state)
        benchmark::DoNotOptimize(build_reduction(f, 4));
}
BENCHMARK(bm_reduction_build)->RangeMultiplier(4)->Range(16, 4096);

BENCHMARK_MAIN();
