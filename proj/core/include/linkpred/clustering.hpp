#pragma once

#include <cstdint>
#include <iosfwd>

#include "linkpred/graph.hpp"

namespace linkpred {

// Per-node triangle counts and per-edge common-neighbor counts, computed once
// per graph and then shared read-only by all scorers. The cached quantities
// are integers; ratios are formed only at query time, so cached and direct
// recomputation agree bit-for-bit.
class ClusteringProfile {
 public:
  explicit ClusteringProfile(const Graph& g);
  // the profile refers back to the graph, which must outlive it
  explicit ClusteringProfile(Graph&&) = delete;

  const Graph& graph() const noexcept { return *graph_; }

  // t_z: number of triangles through z (= edges among Γ(z)).
  std::uint64_t triangle_count(NodeId z) const;
  std::uint64_t total_triangles() const noexcept { return total_triangles_; }

  // C_z = t_z / (k_z choose 2); zero when k_z < 2.
  double node_clustering(NodeId z) const;

  // |Γ(x) ∩ Γ(z)| for an existing edge (x, z); symmetric in its arguments.
  // Throws DomainError when (x, z) is not an edge.
  std::uint64_t edge_common_count(NodeId x, NodeId z) const;

  // LC_{x,z} = |Γ(x) ∩ Γ(z)| / (k_z − 1): how strongly the edge (x, z)
  // clusters from the perspective of z. Asymmetric: alc(x, z) and alc(z, x)
  // share a numerator but divide by different degrees. Throws DomainError
  // when (x, z) is not an edge or when k_z = 1 (the ratio is undefined; a
  // common neighbor z always has k_z ≥ 2).
  double alc(NodeId x, NodeId z) const;

  // CSV dump of (node, k, t, C) rows followed by (x, z, LC) rows.
  void dump_csv(std::ostream& out) const;

 private:
  std::size_t arc_index(NodeId x, NodeId z) const;  // position of z in Γ(x)

  const Graph* graph_;
  std::vector<std::uint64_t> triangle_counts_;   // per node
  std::vector<std::uint64_t> arc_common_counts_; // per CSR arc slot
  std::uint64_t total_triangles_ = 0;
};

}  // namespace linkpred
