#include "linkpred/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

namespace linkpred {

namespace {

std::uint64_t pack(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Unbiased draw from [0, bound), identical on every platform (the standard
// distribution templates are implementation-defined).
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound < 2) return 0;
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

double mean_of(const std::vector<double>& values) {
  double m = 0;
  for (double v : values) m += v;
  return values.empty() ? 0.0 : m / static_cast<double>(values.size());
}

SummaryStat summarize(const std::vector<double>& values) {
  SummaryStat s;
  if (values.empty()) {
    s.mean = std::numeric_limits<double>::quiet_NaN();
    s.stdev = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  s.mean = mean_of(values);
  if (values.size() > 1) {
    double acc = 0;
    for (double v : values) acc += (v - s.mean) * (v - s.mean);
    s.stdev = std::sqrt(acc / static_cast<double>(values.size() - 1));
  }
  return s;
}

}  // namespace

PairSet::PairSet(std::span<const Edge> pairs) {
  keys_.reserve(pairs.size());
  for (auto [a, b] : pairs) keys_.push_back(pack(a, b));
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
}

bool PairSet::contains(NodeId a, NodeId b) const {
  return std::binary_search(keys_.begin(), keys_.end(), pack(a, b));
}

std::size_t PairSet::degree(NodeId v) const {
  std::size_t count = 0;
  for (std::uint64_t key : keys_)
    if (static_cast<NodeId>(key >> 32) == v ||
        static_cast<NodeId>(key & 0xffffffffu) == v)
      ++count;
  return count;
}

Split split_edges(const Graph& g, double fraction, std::uint64_t seed) {
  if (!(fraction >= 0.0) || fraction >= 1.0)
    throw DomainError("probe fraction must lie in [0, 1), got " +
                      std::to_string(fraction));
  std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t probe_n = static_cast<std::size_t>(
      std::floor(fraction * static_cast<double>(m) + 0.5));

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < probe_n; ++i) {
    std::size_t j = i + static_cast<std::size_t>(
                            bounded_draw(rng, static_cast<std::uint64_t>(m - i)));
    std::swap(edges[i], edges[j]);
  }

  std::vector<Edge> probe(edges.begin(),
                          edges.begin() + static_cast<std::ptrdiff_t>(probe_n));
  std::sort(probe.begin(), probe.end());
  std::vector<Edge> train_edges(
      edges.begin() + static_cast<std::ptrdiff_t>(probe_n), edges.end());
  return Split{Graph::from_edges(std::move(train_edges), g.node_count()),
               std::move(probe), fraction, seed};
}

std::vector<ScoredPair> rank_predictions(std::vector<ScoredPair> scores) {
  std::sort(scores.begin(), scores.end(),
            [](const ScoredPair& a, const ScoredPair& b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.x != b.x) return a.x < b.x;
              return a.y < b.y;
            });
  return scores;
}

double precision_at_L(std::span<const ScoredPair> ranked, const PairSet& probe,
                      std::size_t L) {
  if (L == 0) return 0.0;
  std::size_t hits = 0;
  std::size_t horizon = std::min(L, ranked.size());
  for (std::size_t i = 0; i < horizon; ++i)
    if (probe.contains(ranked[i].x, ranked[i].y)) ++hits;
  return static_cast<double>(hits) / static_cast<double>(L);
}

PrecisionCurve precision_curve(std::span<const ScoredPair> ranked,
                               const PairSet& probe,
                               std::span<const std::size_t> l_grid) {
  PrecisionCurve curve;
  curve.l_grid.assign(l_grid.begin(), l_grid.end());
  curve.precision_at.reserve(l_grid.size());
  for (std::size_t L : l_grid)
    curve.precision_at.push_back(precision_at_L(ranked, probe, L));
  curve.aup = mean_of(curve.precision_at);
  return curve;
}

HitKCurve hit_k_curve(std::span<const ScoredPair> ranked, const PairSet& probe,
                      std::span<const std::size_t> k_grid) {
  if (probe.size() == 0)
    throw DomainError("hit-K needs a non-empty probe set");
  std::vector<std::size_t> hit_ranks;
  for (std::size_t i = 0; i < ranked.size(); ++i)
    if (probe.contains(ranked[i].x, ranked[i].y)) hit_ranks.push_back(i + 1);

  HitKCurve curve;
  curve.k_grid.assign(k_grid.begin(), k_grid.end());
  for (std::size_t K : k_grid) {
    bool ok = K >= 1 && K <= hit_ranks.size();
    curve.reachable.push_back(ok);
    curve.needed_L.push_back(ok ? static_cast<double>(hit_ranks[K - 1])
                                : std::numeric_limits<double>::quiet_NaN());
  }
  return curve;
}

PersonalizedResult evaluate_personalized(const Graph& train,
                                         const PairSet& probe,
                                         const ScoreFn& scorer, std::size_t L,
                                         std::span<const std::size_t> l_grid) {
  const NodeId n = train.node_count();
  PersonalizedResult result;
  result.curve.l_grid.assign(l_grid.begin(), l_grid.end());
  std::vector<double> grid_sums(l_grid.size(), 0.0);
  double headline_sum = 0;
  std::size_t nodes = 0;

  std::vector<std::pair<double, NodeId>> ranked;
  for (NodeId v = 0; v < n; ++v) {
    std::size_t pd = probe.degree(v);
    if (pd == 0) continue;
    ranked.clear();
    auto nb = train.neighbors(v);
    std::size_t i = 0;
    for (NodeId u = 0; u < n; ++u) {
      if (u == v) continue;
      while (i < nb.size() && nb[i] < u) ++i;
      if (i < nb.size() && nb[i] == u) continue;
      ranked.push_back({scorer(v, u), u});
    }
    // descending score; within a tie the smaller candidate id wins, which is
    // exactly the canonical-pair tie rule restricted to pairs through v
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
              });
    auto precision_here = [&](std::size_t cap) {
      std::size_t eff = std::min(cap, pd);
      if (eff == 0) return 0.0;
      std::size_t hits = 0;
      std::size_t horizon = std::min(eff, ranked.size());
      for (std::size_t r = 0; r < horizon; ++r)
        if (probe.contains(v, ranked[r].second)) ++hits;
      return static_cast<double>(hits) / static_cast<double>(eff);
    };
    headline_sum += precision_here(L);
    for (std::size_t gi = 0; gi < l_grid.size(); ++gi)
      grid_sums[gi] += precision_here(l_grid[gi]);
    ++nodes;
  }
  if (nodes == 0)
    throw DomainError("no node has a probe link to evaluate");

  result.nodes_evaluated = nodes;
  result.precision = headline_sum / static_cast<double>(nodes);
  result.curve.precision_at.reserve(l_grid.size());
  for (double sum : grid_sums)
    result.curve.precision_at.push_back(sum / static_cast<double>(nodes));
  result.curve.aup = mean_of(result.curve.precision_at);
  return result;
}

EvalConfig resolve_defaults(EvalConfig config, const Graph& g) {
  if (config.indices.empty())
    config.indices.assign(all_indices().begin(), all_indices().end());
  if (config.L == 0)
    config.L = config.task == Task::personalized
                   ? 5
                   : (g.edge_count() < 1000 ? 20 : 100);
  if (config.l_grid.empty()) {
    if (config.task == Task::personalized) {
      for (std::size_t l = 1; l <= config.L; ++l) config.l_grid.push_back(l);
    } else {
      std::size_t step = std::max<std::size_t>(1, config.L / 10);
      for (std::size_t l = step; l <= config.L; l += step)
        config.l_grid.push_back(l);
    }
  }
  if (config.k_grid.empty() && config.task == Task::globalized) {
    std::size_t expected_probe = static_cast<std::size_t>(std::floor(
        config.fraction * static_cast<double>(g.edge_count()) + 0.5));
    std::size_t top = std::min<std::size_t>(100, expected_probe);
    for (std::size_t k = 1; k <= top; ++k) config.k_grid.push_back(k);
  }
  return config;
}

BenchmarkReport run_benchmark(const Graph& g, const EvalConfig& config) {
  EvalConfig cfg = resolve_defaults(config, g);
  std::size_t expected_probe = static_cast<std::size_t>(std::floor(
      cfg.fraction * static_cast<double>(g.edge_count()) + 0.5));
  if (expected_probe == 0)
    throw DomainError("probe fraction " + std::to_string(cfg.fraction) +
                      " hides no links; nothing to evaluate");

  BenchmarkReport report;
  report.config = cfg;
  report.n_nodes = g.node_count();
  report.n_links = g.edge_count();
  report.results.resize(cfg.indices.size());
  for (std::size_t ii = 0; ii < cfg.indices.size(); ++ii)
    report.results[ii].kind = cfg.indices[ii];

  const bool wants_local_path =
      std::find(cfg.indices.begin(), cfg.indices.end(), IndexKind::LocalPath) !=
      cfg.indices.end();

  for (std::size_t r = 0; r < cfg.runs; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t seed = cfg.base_seed + r;
    Split split = split_edges(g, cfg.fraction, seed);
    ClusteringProfile profile(split.train);
    PairSet probe(split.probe);

    std::vector<Edge> near_candidates, far_candidates;
    if (cfg.distance2_candidates) {
      near_candidates = non_edges_within(split.train, 2);
      if (wants_local_path)
        far_candidates = non_edges_within(split.train, 3);
    } else {
      near_candidates = all_non_edges(split.train);
    }

    for (std::size_t ii = 0; ii < cfg.indices.size(); ++ii) {
      IndexKind kind = cfg.indices[ii];
      IndexConfig icfg{kind, cfg.epsilon_lp, cfg.clamp_eps};
      const std::vector<Edge>& candidates =
          (cfg.distance2_candidates && kind == IndexKind::LocalPath)
              ? far_candidates
              : near_candidates;

      RunDetail detail;
      detail.seed = seed;
      detail.probe_size = probe.size();

      if (cfg.task == Task::globalized) {
        auto ranked = rank_predictions(
            score_all_candidates(profile, icfg, candidates, cfg.threads));
        detail.precision = precision_at_L(ranked, probe, cfg.L);
        PrecisionCurve curve = precision_curve(ranked, probe, cfg.l_grid);
        detail.aup = curve.aup;
        detail.curve = std::move(curve.precision_at);
        HitKCurve hk = hit_k_curve(ranked, probe, cfg.k_grid);
        detail.needed_L = std::move(hk.needed_L);
      } else {
        ScoreFn scorer = make_scorer(profile, icfg);
        PersonalizedResult pr = evaluate_personalized(split.train, probe,
                                                      scorer, cfg.L, cfg.l_grid);
        detail.precision = pr.precision;
        detail.aup = pr.curve.aup;
        detail.curve = std::move(pr.curve.precision_at);
        detail.nodes_evaluated = pr.nodes_evaluated;
      }
      report.results[ii].runs.push_back(std::move(detail));
    }
    report.run_seconds.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count());
  }

  for (IndexResult& res : report.results) {
    std::vector<double> precisions, aups;
    for (const RunDetail& run : res.runs) {
      precisions.push_back(run.precision);
      aups.push_back(run.aup);
    }
    res.precision = summarize(precisions);
    res.aup = summarize(aups);
    res.curve.resize(cfg.l_grid.size());
    for (std::size_t gi = 0; gi < cfg.l_grid.size(); ++gi) {
      std::vector<double> column;
      for (const RunDetail& run : res.runs) column.push_back(run.curve[gi]);
      res.curve[gi] = summarize(column);
    }
    if (cfg.task == Task::globalized) {
      res.hitk.resize(cfg.k_grid.size());
      for (std::size_t ki = 0; ki < cfg.k_grid.size(); ++ki) {
        std::vector<double> column;
        for (const RunDetail& run : res.runs)
          if (!std::isnan(run.needed_L[ki]))
            column.push_back(run.needed_L[ki]);
        res.hitk[ki].K = cfg.k_grid[ki];
        res.hitk[ki].reachable_runs = column.size();
        res.hitk[ki].needed_L = summarize(column);
      }
    }
  }
  return report;
}

}  // namespace linkpred
