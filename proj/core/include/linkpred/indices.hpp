#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linkpred/clustering.hpp"
#include "linkpred/graph.hpp"

namespace linkpred {

// The ten similarity indices: seven common-neighbor baselines and the three
// asymmetric-link-clustering (ALC) variants.
enum class IndexKind {
  CN,         // common neighbor count
  LocalPath,  // A^2 + eps * A^3 walk counts
  RA,         // resource allocation
  CRA,        // community resource allocation
  CCLP,       // clustering coefficient of common neighbors
  LNBCN,      // local naive Bayes over node clustering
  MI,         // mutual-information index over node clustering
  ACC,        // ALC sum, best orientation
  ALNB,       // ALC naive-Bayes likelihood ratio, best orientation
  AMI,        // ALC mutual information, best orientation
};

std::span<const IndexKind> all_indices();
std::string_view index_name(IndexKind kind);
// Case-insensitive; accepts the names printed by index_name (plus "lp" for
// localpath). Returns nullopt for unknown names.
std::optional<IndexKind> parse_index(std::string_view name);
// Comma-separated list, or "all". Throws DomainError naming the bad token
// and the valid names.
std::vector<IndexKind> parse_index_list(std::string_view list);

struct IndexConfig {
  IndexKind kind = IndexKind::CN;
  double epsilon_lp = 0.01;  // weight of the cubic term in LocalPath
  double clamp_eps = 1e-9;   // probability clamp for log/ratio indices
};

// All scorers take a candidate pair (x, y): distinct, non-adjacent nodes of
// the training graph. Scores are symmetric and always finite; a pair without
// common neighbors gets the aggregation's natural identity (0 for sums, 1
// for the ALNB product, ln rho for MI).
double score_cn(const ClusteringProfile& p, NodeId x, NodeId y);
double score_local_path(const Graph& g, NodeId x, NodeId y, double epsilon_lp);
double score_ra(const ClusteringProfile& p, NodeId x, NodeId y);
double score_cra(const ClusteringProfile& p, NodeId x, NodeId y);
double score_cclp(const ClusteringProfile& p, NodeId x, NodeId y);
double score_lnbcn(const ClusteringProfile& p, NodeId x, NodeId y,
                   double clamp_eps);
double score_mi(const ClusteringProfile& p, NodeId x, NodeId y,
                double clamp_eps);
double score_acc(const ClusteringProfile& p, NodeId x, NodeId y);
double score_alnb(const ClusteringProfile& p, NodeId x, NodeId y,
                  double clamp_eps);
double score_ami(const ClusteringProfile& p, NodeId x, NodeId y,
                 double clamp_eps);

using ScoreFn = std::function<double(NodeId, NodeId)>;

// Binds one index to a profile. The returned function captures the profile
// by reference and is pure, so one scorer may be shared across threads.
ScoreFn make_scorer(const ClusteringProfile& profile, const IndexConfig& config);

struct ScoredPair {
  NodeId x = 0, y = 0;  // canonical: x < y
  double score = 0;
};

// Candidate enumeration over non-adjacent unordered pairs, canonical order.
// `within_distance` of 2 restricts to pairs sharing a common neighbor: exact
// for every index except LocalPath, which needs 3 (pairs beyond the horizon
// score the index's empty-neighborhood identity and cannot enter top ranks).
std::vector<Edge> all_non_edges(const Graph& g);
std::vector<Edge> non_edges_within(const Graph& g, int within_distance);

// Scores every candidate. Candidates are partitioned across `threads`
// workers writing to disjoint preallocated slots, so the result is identical
// for any thread count.
std::vector<ScoredPair> score_all_candidates(const ClusteringProfile& profile,
                                             const IndexConfig& config,
                                             std::span<const Edge> candidates,
                                             unsigned threads = 1);

// CSV rows "x_label,y_label,index,score" at 12 significant digits.
void write_scores_csv(std::ostream& out, const Graph& g, IndexKind kind,
                      std::span<const ScoredPair> scores);

}  // namespace linkpred
