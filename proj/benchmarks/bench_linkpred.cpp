#include <benchmark/benchmark.h>

#include <random>

#include "linkpred/clustering.hpp"
#include "linkpred/evaluation.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/indices.hpp"
#include "linkpred/stats.hpp"

using namespace linkpred;

namespace {

const Graph& dolphins() {
  static Graph g =
      load_edge_list_file(std::string(LINKPRED_DATA_DIR) + "/dolphins.txt");
  return g;
}

Graph random_graph(NodeId n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
        edges.push_back({i, j});
  return Graph::from_edges(std::move(edges), n);
}

const Graph& synthetic() {
  static Graph g = random_graph(300, 2000.0 / 44850.0, 7);
  return g;
}

void BM_ProfileBuild(benchmark::State& state) {
  const Graph& g = state.range(0) == 0 ? dolphins() : synthetic();
  for (auto _ : state) {
    ClusteringProfile prof(g);
    benchmark::DoNotOptimize(prof.total_triangles());
  }
}
BENCHMARK(BM_ProfileBuild)->Arg(0)->Arg(1);

void BM_NetworkStats(benchmark::State& state) {
  const Graph& g = state.range(0) == 0 ? dolphins() : synthetic();
  for (auto _ : state) {
    NetworkStats s = network_stats(g);
    benchmark::DoNotOptimize(s.assortativity);
  }
}
BENCHMARK(BM_NetworkStats)->Arg(0)->Arg(1);

void BM_ScoreAllCandidates(benchmark::State& state) {
  const Graph& g = synthetic();
  ClusteringProfile prof(g);
  auto candidates = all_non_edges(g);
  IndexKind kind = all_indices()[static_cast<std::size_t>(state.range(0))];
  IndexConfig cfg{kind};
  for (auto _ : state) {
    auto scored = score_all_candidates(prof, cfg, candidates);
    benchmark::DoNotOptimize(scored.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(candidates.size()));
  state.SetLabel(std::string(index_name(kind)));
}
BENCHMARK(BM_ScoreAllCandidates)->DenseRange(0, 9);

void BM_SplitAndRank(benchmark::State& state) {
  const Graph& g = synthetic();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Split s = split_edges(g, 0.1, seed++);
    ClusteringProfile prof(s.train);
    auto ranked = rank_predictions(score_all_candidates(
        prof, IndexConfig{IndexKind::ACC}, all_non_edges(s.train)));
    benchmark::DoNotOptimize(ranked.data());
  }
}
BENCHMARK(BM_SplitAndRank);

void BM_PersonalizedEval(benchmark::State& state) {
  const Graph& g = dolphins();
  Split s = split_edges(g, 0.1, 3);
  ClusteringProfile prof(s.train);
  PairSet probe(s.probe);
  ScoreFn scorer = make_scorer(prof, IndexConfig{IndexKind::ACC});
  std::vector<std::size_t> grid{1, 2, 3, 4, 5};
  for (auto _ : state) {
    PersonalizedResult pr = evaluate_personalized(s.train, probe, scorer, 5, grid);
    benchmark::DoNotOptimize(pr.precision);
  }
}
BENCHMARK(BM_PersonalizedEval);

}  // namespace

BENCHMARK_MAIN();
