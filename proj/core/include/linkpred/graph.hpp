#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linkpred/errors.hpp"

namespace linkpred {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;  // canonical form keeps first < second

// Immutable undirected simple graph. Adjacency is CSR with per-node sorted
// neighbor ranges, so neighborhood intersection and edge lookup are cheap and
// every traversal order is deterministic. All queries are const and safe to
// call concurrently.
class Graph {
 public:
  // Builds a graph from (possibly messy) endpoint pairs: direction is
  // discarded, self-loops dropped, duplicates merged. Node ids must be
  // < node_count; labels default to the decimal id.
  static Graph from_edges(std::vector<Edge> edges, NodeId node_count);

  NodeId node_count() const noexcept {
    return static_cast<NodeId>(offsets_.size() - 1);
  }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Sorted, ascending. Throws LookupError on out-of-range ids.
  std::span<const NodeId> neighbors(NodeId v) const;
  NodeId degree(NodeId v) const;
  bool has_edge(NodeId a, NodeId b) const;

  const std::string& label(NodeId v) const;
  std::optional<NodeId> find_label(std::string_view label) const;

  // All edges in canonical (a < b) lexicographic order.
  std::vector<Edge> edges() const;

  double density() const noexcept;  // |E| / (|V| choose 2)

 private:
  friend Graph load_edge_list(std::istream&, struct LoadReport*);

  Graph() = default;
  void build(std::vector<Edge>&& normalized, NodeId node_count);
  void check_node(NodeId v) const;

  std::vector<std::size_t> offsets_;  // size node_count + 1
  std::vector<NodeId> adjacency_;     // flat sorted neighbor lists
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_to_id_;
  std::size_t edge_count_ = 0;
};

// Counters reported by the loader for input hygiene.
struct LoadReport {
  std::size_t lines_read = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_merged = 0;
};

// Reads "label label" per line; `#`/`%` lines and blank lines are ignored.
// Node ids are assigned in order of first appearance. Throws ParseError on a
// malformed line (with its number) and on input containing no edges.
Graph load_edge_list(std::istream& in, LoadReport* report = nullptr);
Graph load_edge_list_file(const std::string& path, LoadReport* report = nullptr);

// Γ(x) ∩ Γ(y), ascending. x and y never appear in the result.
std::vector<NodeId> common_neighbors(const Graph& g, NodeId x, NodeId y);
std::size_t common_neighbor_count(const Graph& g, NodeId x, NodeId y);

}  // namespace linkpred
