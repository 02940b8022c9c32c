#include "linkpred/stats.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <vector>

#include "linkpred/clustering.hpp"

namespace linkpred {

namespace {

// Mean BFS distance over reachable ordered pairs; 0 when no pair is reachable.
double average_shortest_distance(const Graph& g) {
  const NodeId n = g.node_count();
  double total = 0;
  std::size_t pairs = 0;
  std::vector<int> dist(n);
  std::vector<NodeId> frontier;
  frontier.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    frontier.assign(1, s);
    while (!frontier.empty()) {
      std::vector<NodeId> next;
      for (NodeId v : frontier)
        for (NodeId u : g.neighbors(v))
          if (dist[u] < 0) {
            dist[u] = dist[v] + 1;
            next.push_back(u);
          }
      frontier = std::move(next);
    }
    for (NodeId v = 0; v < n; ++v)
      if (v != s && dist[v] > 0) {
        total += dist[v];
        ++pairs;
      }
  }
  return pairs ? total / static_cast<double>(pairs) : 0.0;
}

}  // namespace

NetworkStats network_stats(const Graph& g) {
  const NodeId n = g.node_count();
  if (n < 2)
    throw DomainError("network statistics need at least 2 nodes, got " +
                      std::to_string(n));

  NetworkStats s;
  s.n_nodes = n;
  s.n_links = g.edge_count();
  s.density = g.density();

  double sk = 0, sk2 = 0;
  for (NodeId v = 0; v < n; ++v) {
    double k = g.degree(v);
    sk += k;
    sk2 += k * k;
  }
  s.avg_degree = sk / n;
  s.heterogeneity =
      s.avg_degree > 0 ? (sk2 / n) / (s.avg_degree * s.avg_degree) : 0.0;

  ClusteringProfile prof(g);
  double c = 0;
  for (NodeId v = 0; v < n; ++v) c += prof.node_clustering(v);
  s.avg_node_clustering = c / n;

  // oriented links (x, z); LC toward a degree-1 endpoint counts as 0
  double lc = 0;
  std::size_t arcs = 0;
  double sj = 0, sjj = 0, sjk = 0;
  for (NodeId z = 0; z < n; ++z)
    for (NodeId x : g.neighbors(z)) {
      if (g.degree(z) >= 2)
        lc += static_cast<double>(prof.edge_common_count(x, z)) /
              (g.degree(z) - 1.0);
      ++arcs;
      sj += g.degree(z);
      sjj += static_cast<double>(g.degree(z)) * g.degree(z);
      sjk += static_cast<double>(g.degree(z)) * g.degree(x);
    }
  s.avg_link_clustering = arcs ? lc / static_cast<double>(arcs) : 0.0;
  if (arcs) {
    double mj = sj / static_cast<double>(arcs);
    double var = sjj / static_cast<double>(arcs) - mj * mj;
    // a degree-regular graph has zero degree variance; report 0, not NaN
    s.assortativity =
        var > 0 ? (sjk / static_cast<double>(arcs) - mj * mj) / var : 0.0;
  }

  s.avg_shortest_distance = average_shortest_distance(g);
  return s;
}

void write_stats_csv(std::ostream& out, const NetworkStats& stats) {
  char buf[64];
  auto row = [&](const char* name, double value) {
    std::snprintf(buf, sizeof buf, "%.6g", value);
    out << name << ',' << buf << '\n';
  };
  out << "n_nodes," << stats.n_nodes << '\n';
  out << "n_links," << stats.n_links << '\n';
  row("avg_shortest_distance", stats.avg_shortest_distance);
  row("avg_degree", stats.avg_degree);
  row("heterogeneity", stats.heterogeneity);
  row("avg_node_clustering", stats.avg_node_clustering);
  row("avg_link_clustering", stats.avg_link_clustering);
  row("assortativity", stats.assortativity);
  row("density", stats.density);
}

}  // namespace linkpred
