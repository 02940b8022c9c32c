#pragma once

#include <cstddef>
#include <iosfwd>

#include "linkpred/graph.hpp"

namespace linkpred {

// Whole-network summary statistics.
//
// Conventions (documented in the README):
//  - avg_shortest_distance averages over reachable ordered pairs only, so
//    disconnected graphs are accepted;
//  - heterogeneity H = <k^2> / <k>^2;
//  - node clustering C_z counts as 0 when k_z < 2;
//  - avg_link_clustering averages LC over all 2|E| oriented links, with
//    LC_{x,z} := 0 when k_z = 1;
//  - assortativity is the Pearson correlation of endpoint degrees over
//    oriented links, and 0 for degree-regular graphs (zero variance).
struct NetworkStats {
  std::size_t n_nodes = 0;
  std::size_t n_links = 0;
  double avg_shortest_distance = 0;
  double avg_degree = 0;
  double heterogeneity = 0;
  double avg_node_clustering = 0;
  double avg_link_clustering = 0;
  double assortativity = 0;
  double density = 0;
};

// Throws DomainError for graphs with fewer than 2 nodes.
NetworkStats network_stats(const Graph& g);

// One "statistic,value" row per field, 6 significant digits.
void write_stats_csv(std::ostream& out, const NetworkStats& stats);

}  // namespace linkpred
