#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linkpred/graph.hpp"
#include "linkpred/indices.hpp"

namespace linkpred {

// Membership queries over unordered node pairs (the probe set).
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(std::span<const Edge> pairs);

  bool contains(NodeId a, NodeId b) const;
  std::size_t size() const noexcept { return keys_.size(); }
  // Number of pairs touching v.
  std::size_t degree(NodeId v) const;

 private:
  std::vector<std::uint64_t> keys_;  // packed canonical pairs, sorted
};

// Train/probe partition of a graph's edge set.
struct Split {
  Graph train;               // all nodes kept; probe edges removed
  std::vector<Edge> probe;   // canonical order
  double fraction = 0;
  std::uint64_t seed = 0;
};

// Uniform sample without replacement of round(fraction * |E|) edges into the
// probe set. Deterministic for a given seed, independent of platform (the
// shuffle uses its own bounded-draw routine, not distribution templates).
// fraction must be in [0, 1).
Split split_edges(const Graph& g, double fraction, std::uint64_t seed);

// Descending score; ties broken by canonical pair (x, y) lexicographic, so
// the ranking is a total order independent of input order.
std::vector<ScoredPair> rank_predictions(std::vector<ScoredPair> scores);

// Fraction of the top-L entries that are probe pairs. If fewer than L
// candidates exist, the divisor stays L (the shortfall counts as misses).
double precision_at_L(std::span<const ScoredPair> ranked, const PairSet& probe,
                      std::size_t L);

struct PrecisionCurve {
  std::vector<std::size_t> l_grid;
  std::vector<double> precision_at;  // aligned with l_grid
  double aup = 0;                    // arithmetic mean over the grid
};

PrecisionCurve precision_curve(std::span<const ScoredPair> ranked,
                               const PairSet& probe,
                               std::span<const std::size_t> l_grid);

struct HitKCurve {
  std::vector<std::size_t> k_grid;
  std::vector<double> needed_L;  // 1-based rank of the K-th probe hit
  std::vector<bool> reachable;   // false when the list holds < K probe pairs
};

// Throws DomainError when the probe set is empty.
HitKCurve hit_k_curve(std::span<const ScoredPair> ranked, const PairSet& probe,
                      std::span<const std::size_t> k_grid);

struct PersonalizedResult {
  double precision = 0;          // mean per-node precision at the headline L
  PrecisionCurve curve;          // same per-node protocol over a small L-grid
  std::size_t nodes_evaluated = 0;
};

// Per-node protocol: for every node v with at least one probe link, rank its
// train non-neighbors by score(v, .), cap the list at min(L, probe-degree),
// and average node precisions. Nodes without probe links are excluded.
// Throws DomainError when no node qualifies.
PersonalizedResult evaluate_personalized(const Graph& train,
                                         const PairSet& probe,
                                         const ScoreFn& scorer, std::size_t L,
                                         std::span<const std::size_t> l_grid);

enum class Task { globalized, personalized };

struct EvalConfig {
  Task task = Task::globalized;
  std::vector<IndexKind> indices;   // empty → all ten
  double fraction = 0.1;
  std::size_t runs = 30;
  std::uint64_t base_seed = 1;
  std::size_t L = 0;                // 0 → task- and size-dependent default
  std::vector<std::size_t> l_grid;  // empty → default for the task
  std::vector<std::size_t> k_grid;  // empty → 1..min(100, probe size)
  double epsilon_lp = 0.01;
  double clamp_eps = 1e-9;
  unsigned threads = 1;
  bool distance2_candidates = false;
};

// Fills unset L/grid fields with the documented defaults: globalized L is 20
// below 1000 links and 100 from 1000 up, with grids {2,4,...,20} and
// {10,20,...,100}; personalized uses L = 5 and grid {1,...,5}.
EvalConfig resolve_defaults(EvalConfig config, const Graph& g);

struct SummaryStat {
  double mean = 0;
  double stdev = 0;  // sample standard deviation; 0 for a single run
};

struct HitKSummary {
  std::size_t K = 0;
  SummaryStat needed_L;         // over runs where K was reachable
  std::size_t reachable_runs = 0;
};

struct RunDetail {
  std::uint64_t seed = 0;
  std::size_t probe_size = 0;
  double precision = 0;
  double aup = 0;
  std::vector<double> curve;      // per l_grid entry
  std::vector<double> needed_L;   // per k_grid entry; NaN when unreachable
  std::size_t nodes_evaluated = 0;  // personalized task only
};

struct IndexResult {
  IndexKind kind = IndexKind::CN;
  SummaryStat precision, aup;
  std::vector<SummaryStat> curve;  // per l_grid
  std::vector<HitKSummary> hitk;   // globalized task only
  std::vector<RunDetail> runs;
};

struct BenchmarkReport {
  EvalConfig config;  // resolved
  std::size_t n_nodes = 0, n_links = 0;
  std::vector<IndexResult> results;
  // Wall-clock per run, for console diagnostics. Deliberately kept out of
  // the CSV/JSON writers so identical configs produce identical files.
  std::vector<double> run_seconds;
};

// The full protocol: for run r, split with seed base_seed + r, score all
// candidate pairs of the train graph per index, rank, evaluate. Runs and
// indices are aggregated in fixed order, so the report is deterministic.
BenchmarkReport run_benchmark(const Graph& g, const EvalConfig& config);

}  // namespace linkpred
