#include "steiner/constructors.hpp"
#include "steiner/extremal.hpp"
#include "steiner/steiner.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace steiner;

Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g = path_graph(n);
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 2; b < n; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

void BM_SteinerDistanceDreyfusWagner(benchmark::State& state) {
  const Graph g = random_connected(40, 0.08, 1);
  SteinerSolver solver(g);
  std::vector<Vertex> terminals;
  for (Vertex v = 0; v < static_cast<Vertex>(state.range(0)); ++v) terminals.push_back(v * 3);
  for (auto _ : state) benchmark::DoNotOptimize(solver.distance(terminals));
}
BENCHMARK(BM_SteinerDistanceDreyfusWagner)->DenseRange(4, 10, 2);

void BM_SwKGeneral(benchmark::State& state) {
  const Graph g = random_connected(static_cast<std::size_t>(state.range(0)), 0.2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sw_k(g, 4));
}
BENCHMARK(BM_SwKGeneral)->Arg(12)->Arg(16)->Arg(20);

void BM_SwKTreeEdgeCut(benchmark::State& state) {
  const Graph t = path_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sw_k_tree(t, 5));
}
BENCHMARK(BM_SwKTreeEdgeCut)->Arg(100)->Arg(1000);

void BM_SwKTreeEnumeration(benchmark::State& state) {
  const Graph t = path_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sw_k(t, 4));
}
BENCHMARK(BM_SwKTreeEnumeration)->Arg(20)->Arg(30);

void BM_PackingConstruction(benchmark::State& state) {
  const Graph g = random_connected(static_cast<std::size_t>(state.range(0)), 0.02, 3);
  for (auto _ : state) benchmark::DoNotOptimize(packing_spanning_tree(g, 0));
}
BENCHMARK(BM_PackingConstruction)->Arg(100)->Arg(400);

void BM_MatchingConstruction(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(matching_spanning_tree(g, Edge{0, 1}));
}
BENCHMARK(BM_MatchingConstruction)->Arg(100)->Arg(400);

void BM_VerifyPacking(benchmark::State& state) {
  const Graph g = random_connected(static_cast<std::size_t>(state.range(0)), 0.05, 4);
  const PackingCertificate cert = packing_spanning_tree(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(cert, g, 3));
}
BENCHMARK(BM_VerifyPacking)->Arg(30)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
