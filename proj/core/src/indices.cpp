#include "linkpred/indices.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

namespace linkpred {

namespace {

constexpr std::array<IndexKind, 10> kAllIndices = {
    IndexKind::CN,    IndexKind::LocalPath, IndexKind::RA,  IndexKind::CRA,
    IndexKind::CCLP,  IndexKind::LNBCN,     IndexKind::MI,  IndexKind::ACC,
    IndexKind::ALNB,  IndexKind::AMI,
};

constexpr std::array<std::string_view, 10> kIndexNames = {
    "cn", "localpath", "ra", "cra", "cclp",
    "lnbcn", "mi", "acc", "alnb", "ami",
};

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

double clamp_unit(double v, double eps) {
  return std::min(std::max(v, eps), 1.0 - eps);
}

// Visits Γ(x) ∩ Γ(y) in ascending order.
template <typename Fn>
void for_common(const Graph& g, NodeId x, NodeId y, Fn&& fn) {
  auto a = g.neighbors(x);
  auto b = g.neighbors(y);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      fn(a[i]);
      ++i;
      ++j;
    }
  }
}

}  // namespace

std::span<const IndexKind> all_indices() { return kAllIndices; }

std::string_view index_name(IndexKind kind) {
  return kIndexNames[static_cast<std::size_t>(kind)];
}

std::optional<IndexKind> parse_index(std::string_view name) {
  std::string key = lowercase(name);
  if (key == "lp") return IndexKind::LocalPath;
  for (std::size_t i = 0; i < kIndexNames.size(); ++i)
    if (key == kIndexNames[i]) return kAllIndices[i];
  return std::nullopt;
}

std::vector<IndexKind> parse_index_list(std::string_view list) {
  std::string key = lowercase(list);
  if (key == "all")
    return {kAllIndices.begin(), kAllIndices.end()};
  std::vector<IndexKind> out;
  std::size_t start = 0;
  while (start <= key.size()) {
    std::size_t comma = key.find(',', start);
    if (comma == std::string::npos) comma = key.size();
    std::string token = key.substr(start, comma - start);
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (!token.empty()) {
      auto kind = parse_index(token);
      if (!kind) {
        std::string names;
        for (auto name : kIndexNames) {
          if (!names.empty()) names += ", ";
          names += name;
        }
        throw DomainError("unknown index '" + token + "'; valid names: " +
                          names + " (or 'all')");
      }
      out.push_back(*kind);
    }
    start = comma + 1;
  }
  if (out.empty()) throw DomainError("empty index list");
  return out;
}

double score_cn(const ClusteringProfile& p, NodeId x, NodeId y) {
  return static_cast<double>(common_neighbor_count(p.graph(), x, y));
}

double score_local_path(const Graph& g, NodeId x, NodeId y,
                        double epsilon_lp) {
  // walk counts: (A^2)_xy = |Γ(x) ∩ Γ(y)|, (A^3)_xy = Σ_{u ∈ Γ(x)} (A^2)_uy;
  // exact for non-adjacent x, y because no length-3 walk can revisit a node
  std::uint64_t paths2 = common_neighbor_count(g, x, y);
  std::uint64_t paths3 = 0;
  for (NodeId u : g.neighbors(x)) paths3 += common_neighbor_count(g, u, y);
  return static_cast<double>(paths2) +
         epsilon_lp * static_cast<double>(paths3);
}

double score_ra(const ClusteringProfile& p, NodeId x, NodeId y) {
  const Graph& g = p.graph();
  double s = 0;
  for_common(g, x, y, [&](NodeId z) { s += 1.0 / g.degree(z); });
  return s;
}

double score_cra(const ClusteringProfile& p, NodeId x, NodeId y) {
  const Graph& g = p.graph();
  std::vector<NodeId> cn;
  for_common(g, x, y, [&](NodeId z) { cn.push_back(z); });
  double s = 0;
  for (NodeId z : cn) {
    auto nb = g.neighbors(z);
    std::size_t gamma = 0;
    std::size_t i = 0, j = 0;
    while (i < cn.size() && j < nb.size()) {
      if (cn[i] < nb[j]) {
        ++i;
      } else if (nb[j] < cn[i]) {
        ++j;
      } else {
        ++gamma;
        ++i;
        ++j;
      }
    }
    s += static_cast<double>(gamma) / g.degree(z);
  }
  return s;
}

double score_cclp(const ClusteringProfile& p, NodeId x, NodeId y) {
  double s = 0;
  for_common(p.graph(), x, y, [&](NodeId z) { s += p.node_clustering(z); });
  return s;
}

double score_lnbcn(const ClusteringProfile& p, NodeId x, NodeId y,
                   double clamp_eps) {
  const double rho = p.graph().density();
  double s = 0;
  for_common(p.graph(), x, y, [&](NodeId z) {
    double c = clamp_unit(p.node_clustering(z), clamp_eps);
    s += std::log(c / (1.0 - c)) + std::log((1.0 - rho) / rho);
  });
  return s;
}

double score_mi(const ClusteringProfile& p, NodeId x, NodeId y,
                double clamp_eps) {
  const double rho = p.graph().density();
  // the prior term −I(link) = ln ρ enters once, not per common neighbor
  double s = std::log(rho);
  for_common(p.graph(), x, y, [&](NodeId z) {
    double c = clamp_unit(p.node_clustering(z), clamp_eps);
    s += -std::log(rho) + std::log(c);
  });
  return s;
}

double score_acc(const ClusteringProfile& p, NodeId x, NodeId y) {
  double sx = 0, sy = 0;
  for_common(p.graph(), x, y, [&](NodeId z) {
    sx += p.alc(x, z);
    sy += p.alc(y, z);
  });
  return std::max(sx, sy);
}

double score_alnb(const ClusteringProfile& p, NodeId x, NodeId y,
                  double clamp_eps) {
  const double rho = p.graph().density();
  double px = 1, py = 1;
  for_common(p.graph(), x, y, [&](NodeId z) {
    double lx = clamp_unit(p.alc(x, z), clamp_eps);
    double ly = clamp_unit(p.alc(y, z), clamp_eps);
    px *= (1.0 - rho) * lx / (rho * (1.0 - lx));
    py *= (1.0 - rho) * ly / (rho * (1.0 - ly));
  });
  return std::max(px, py);
}

double score_ami(const ClusteringProfile& p, NodeId x, NodeId y,
                 double clamp_eps) {
  const double rho = p.graph().density();
  double sx = 0, sy = 0;
  for_common(p.graph(), x, y, [&](NodeId z) {
    sx += -std::log(rho) + std::log(clamp_unit(p.alc(x, z), clamp_eps));
    sy += -std::log(rho) + std::log(clamp_unit(p.alc(y, z), clamp_eps));
  });
  return std::max(sx, sy);
}

ScoreFn make_scorer(const ClusteringProfile& profile,
                    const IndexConfig& config) {
  const ClusteringProfile* p = &profile;
  switch (config.kind) {
    case IndexKind::CN:
      return [p](NodeId x, NodeId y) { return score_cn(*p, x, y); };
    case IndexKind::LocalPath: {
      double eps = config.epsilon_lp;
      return [p, eps](NodeId x, NodeId y) {
        return score_local_path(p->graph(), x, y, eps);
      };
    }
    case IndexKind::RA:
      return [p](NodeId x, NodeId y) { return score_ra(*p, x, y); };
    case IndexKind::CRA:
      return [p](NodeId x, NodeId y) { return score_cra(*p, x, y); };
    case IndexKind::CCLP:
      return [p](NodeId x, NodeId y) { return score_cclp(*p, x, y); };
    case IndexKind::LNBCN: {
      double eps = config.clamp_eps;
      return [p, eps](NodeId x, NodeId y) {
        return score_lnbcn(*p, x, y, eps);
      };
    }
    case IndexKind::MI: {
      double eps = config.clamp_eps;
      return [p, eps](NodeId x, NodeId y) { return score_mi(*p, x, y, eps); };
    }
    case IndexKind::ACC:
      return [p](NodeId x, NodeId y) { return score_acc(*p, x, y); };
    case IndexKind::ALNB: {
      double eps = config.clamp_eps;
      return [p, eps](NodeId x, NodeId y) {
        return score_alnb(*p, x, y, eps);
      };
    }
    case IndexKind::AMI: {
      double eps = config.clamp_eps;
      return [p, eps](NodeId x, NodeId y) { return score_ami(*p, x, y, eps); };
    }
  }
  throw DomainError("unhandled index kind");
}

std::vector<Edge> all_non_edges(const Graph& g) {
  std::vector<Edge> out;
  const NodeId n = g.node_count();
  for (NodeId a = 0; a < n; ++a) {
    auto nb = g.neighbors(a);
    std::size_t i = 0;
    while (i < nb.size() && nb[i] <= a) ++i;
    for (NodeId b = a + 1; b < n; ++b) {
      if (i < nb.size() && nb[i] == b) {
        ++i;
        continue;
      }
      out.push_back({a, b});
    }
  }
  return out;
}

std::vector<Edge> non_edges_within(const Graph& g, int within_distance) {
  if (within_distance < 2)
    throw DomainError("candidate horizon must be at least 2");
  const NodeId n = g.node_count();
  std::vector<Edge> out;
  std::vector<int> dist(n);
  std::vector<NodeId> frontier, next;
  for (NodeId a = 0; a < n; ++a) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[a] = 0;
    frontier.assign(1, a);
    for (int level = 1; level <= within_distance && !frontier.empty();
         ++level) {
      next.clear();
      for (NodeId v : frontier)
        for (NodeId u : g.neighbors(v))
          if (dist[u] < 0) {
            dist[u] = level;
            next.push_back(u);
          }
      std::swap(frontier, next);
    }
    for (NodeId b = a + 1; b < n; ++b)
      if (dist[b] >= 2) out.push_back({a, b});
  }
  return out;
}

std::vector<ScoredPair> score_all_candidates(const ClusteringProfile& profile,
                                             const IndexConfig& config,
                                             std::span<const Edge> candidates,
                                             unsigned threads) {
  std::vector<ScoredPair> out(candidates.size());
  ScoreFn scorer = make_scorer(profile, config);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      auto [x, y] = candidates[i];
      out[i] = {x, y, scorer(x, y)};
    }
  };
  if (threads <= 1 || candidates.size() < 2 * threads) {
    work(0, candidates.size());
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::size_t chunk = (candidates.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(candidates.size(), lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(work, lo, hi);
  }
  for (auto& th : pool) th.join();
  return out;
}

void write_scores_csv(std::ostream& out, const Graph& g, IndexKind kind,
                      std::span<const ScoredPair> scores) {
  out << "x_label,y_label,index,score\n";
  char buf[64];
  for (const ScoredPair& sp : scores) {
    std::snprintf(buf, sizeof buf, "%.12g", sp.score);
    out << g.label(sp.x) << ',' << g.label(sp.y) << ',' << index_name(kind)
        << ',' << buf << '\n';
  }
}

}  // namespace linkpred
