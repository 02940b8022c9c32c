#include "linkpred/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace linkpred {

namespace {

std::vector<Edge> normalize_edges(std::vector<Edge>&& edges, NodeId node_count,
                                  std::size_t* self_loops,
                                  std::size_t* duplicates) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  std::size_t loops = 0;
  for (auto [a, b] : edges) {
    if (a >= node_count || b >= node_count)
      throw LookupError("edge endpoint " + std::to_string(std::max(a, b)) +
                        " out of range for " + std::to_string(node_count) +
                        " nodes");
    if (a == b) {
      ++loops;
      continue;
    }
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  std::size_t before = out.size();
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (self_loops) *self_loops = loops;
  if (duplicates) *duplicates = before - out.size();
  return out;
}

}  // namespace

void Graph::build(std::vector<Edge>&& normalized, NodeId node_count) {
  std::vector<NodeId> degree(node_count, 0);
  for (auto [a, b] : normalized) {
    ++degree[a];
    ++degree[b];
  }
  offsets_.assign(node_count + 1, 0);
  for (NodeId v = 0; v < node_count; ++v)
    offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[node_count]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (auto [a, b] : normalized) {
    adjacency_[cursor[a]++] = b;
    adjacency_[cursor[b]++] = a;
  }
  // canonical edge order fills each neighbor list in ascending order already
  // for the second endpoint, but not for the first; sort per node
  for (NodeId v = 0; v < node_count; ++v)
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  edge_count_ = normalized.size();
}

Graph Graph::from_edges(std::vector<Edge> edges, NodeId node_count) {
  Graph g;
  g.build(normalize_edges(std::move(edges), node_count, nullptr, nullptr),
          node_count);
  g.labels_.reserve(node_count);
  for (NodeId v = 0; v < node_count; ++v) {
    g.labels_.push_back(std::to_string(v));
    g.label_to_id_.emplace(g.labels_.back(), v);
  }
  return g;
}

void Graph::check_node(NodeId v) const {
  if (v >= node_count())
    throw LookupError("node id " + std::to_string(v) +
                      " out of range (graph has " +
                      std::to_string(node_count()) + " nodes)");
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  check_node(v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

NodeId Graph::degree(NodeId v) const {
  check_node(v);
  return static_cast<NodeId>(offsets_[v + 1] - offsets_[v]);
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

const std::string& Graph::label(NodeId v) const {
  check_node(v);
  return labels_[v];
}

std::optional<NodeId> Graph::find_label(std::string_view label) const {
  auto it = label_to_id_.find(std::string(label));
  if (it == label_to_id_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId v = 0; v < node_count(); ++v)
    for (NodeId u : neighbors(v))
      if (v < u) out.push_back({v, u});
  return out;
}

double Graph::density() const noexcept {
  if (node_count() < 2) return 0.0;
  double possible =
      static_cast<double>(node_count()) * (node_count() - 1) / 2.0;
  return static_cast<double>(edge_count_) / possible;
}

Graph load_edge_list(std::istream& in, LoadReport* report) {
  LoadReport rep;
  std::vector<Edge> raw;
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](std::string&& label) {
    auto [it, inserted] = ids.try_emplace(std::move(label),
                                          static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(it->first);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  std::size_t self_loops = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ++rep.lines_read;
    std::istringstream fields(line);
    std::string a, b;
    if (!(fields >> a)) continue;  // blank line
    if (a[0] == '#' || a[0] == '%') continue;
    if (!(fields >> b))
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected two node labels, got one",
                       line_no);
    NodeId u = intern(std::move(a));
    NodeId v = intern(std::move(b));
    if (u == v) {
      ++self_loops;
      continue;
    }
    raw.push_back({u, v});
  }
  if (raw.empty())
    throw ParseError("input contains no edges");

  Graph g;
  std::size_t duplicates = 0;
  NodeId n = static_cast<NodeId>(labels.size());
  g.build(normalize_edges(std::move(raw), n, nullptr, &duplicates), n);
  g.labels_ = std::move(labels);
  g.label_to_id_ = std::move(ids);
  rep.self_loops_dropped = self_loops;
  rep.duplicates_merged = duplicates;
  if (report) *report = rep;
  return g;
}

Graph load_edge_list_file(const std::string& path, LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file: " + path);
  return load_edge_list(in, report);
}

std::vector<NodeId> common_neighbors(const Graph& g, NodeId x, NodeId y) {
  auto a = g.neighbors(x);
  auto b = g.neighbors(y);
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::size_t common_neighbor_count(const Graph& g, NodeId x, NodeId y) {
  auto a = g.neighbors(x);
  auto b = g.neighbors(y);
  std::size_t count = 0;
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

}  // namespace linkpred
