#include "linkpred/clustering.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace linkpred {

namespace {

std::uint64_t intersection_size(std::span<const NodeId> a,
                                std::span<const NodeId> b) {
  std::uint64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

ClusteringProfile::ClusteringProfile(const Graph& g) : graph_(&g) {
  const NodeId n = g.node_count();
  triangle_counts_.assign(n, 0);
  std::size_t arcs = 0;
  for (NodeId v = 0; v < n; ++v) arcs += g.degree(v);
  arc_common_counts_.assign(arcs, 0);

  std::size_t slot = 0;
  for (NodeId v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    std::uint64_t incident = 0;
    for (NodeId u : nb) {
      std::uint64_t cn = intersection_size(nb, g.neighbors(u));
      arc_common_counts_[slot++] = cn;
      incident += cn;
    }
    // every triangle through v is seen from both of its other corners
    triangle_counts_[v] = incident / 2;
    total_triangles_ += triangle_counts_[v];
  }
  total_triangles_ /= 3;
}

std::size_t ClusteringProfile::arc_index(NodeId x, NodeId z) const {
  auto nb = graph_->neighbors(x);
  auto it = std::lower_bound(nb.begin(), nb.end(), z);
  if (it == nb.end() || *it != z)
    throw DomainError("(" + graph_->label(x) + ", " + graph_->label(z) +
                      ") is not an edge");
  std::size_t base = static_cast<std::size_t>(
      nb.data() - graph_->neighbors(0).data());
  return base + static_cast<std::size_t>(it - nb.begin());
}

std::uint64_t ClusteringProfile::triangle_count(NodeId z) const {
  (void)graph_->degree(z);  // range check
  return triangle_counts_[z];
}

double ClusteringProfile::node_clustering(NodeId z) const {
  std::uint64_t k = graph_->degree(z);
  if (k < 2) return 0.0;
  return static_cast<double>(triangle_counts_[z]) /
         (static_cast<double>(k) * (k - 1) / 2.0);
}

std::uint64_t ClusteringProfile::edge_common_count(NodeId x, NodeId z) const {
  return arc_common_counts_[arc_index(x, z)];
}

double ClusteringProfile::alc(NodeId x, NodeId z) const {
  std::uint64_t cn = edge_common_count(x, z);
  NodeId kz = graph_->degree(z);
  if (kz < 2)
    throw DomainError("link clustering toward " + graph_->label(z) +
                      " is undefined: degree 1");
  return static_cast<double>(cn) / (static_cast<double>(kz) - 1.0);
}

void ClusteringProfile::dump_csv(std::ostream& out) const {
  const Graph& g = *graph_;
  out << "node,k,t,C\n";
  char buf[64];
  for (NodeId v = 0; v < g.node_count(); ++v) {
    std::snprintf(buf, sizeof buf, "%.12g", node_clustering(v));
    out << g.label(v) << ',' << g.degree(v) << ',' << triangle_counts_[v]
        << ',' << buf << '\n';
  }
  out << "x,z,LC\n";
  for (NodeId x = 0; x < g.node_count(); ++x)
    for (NodeId z : g.neighbors(x)) {
      // degree-1 endpoints use the zero convention so every arc gets a row
      double lc = g.degree(z) >= 2 ? alc(x, z) : 0.0;
      std::snprintf(buf, sizeof buf, "%.12g", lc);
      out << g.label(x) << ',' << g.label(z) << ',' << buf << '\n';
    }
}

}  // namespace linkpred
