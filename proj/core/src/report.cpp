#include "linkpred/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace linkpred {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_or_empty(double v) { return std::isnan(v) ? "" : fmt(v); }

std::string task_name(Task task) {
  return task == Task::globalized ? "globalized" : "personalized";
}

std::string join_names(const std::vector<IndexKind>& kinds) {
  std::string out;
  for (IndexKind k : kinds) {
    if (!out.empty()) out += ',';
    out += index_name(k);
  }
  return out;
}

template <typename T>
std::string join_numbers(const std::vector<T>& values) {
  std::string out;
  for (T v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

void write_common_header(std::ostream& out, const ReportHeader& header) {
  out << "# linkpred " << kVersion << '\n';
  out << "# command: " << header.command << '\n';
  out << "# input: " << header.input_path << '\n';
}

void write_config_header(std::ostream& out, const BenchmarkReport& report) {
  const EvalConfig& cfg = report.config;
  out << "# task: " << task_name(cfg.task) << '\n';
  out << "# indices: " << join_names(cfg.indices) << '\n';
  out << "# probe: " << fmt(cfg.fraction) << '\n';
  out << "# runs: " << cfg.runs << '\n';
  out << "# seed: " << cfg.base_seed << '\n';
  out << "# L: " << cfg.L << '\n';
  out << "# L grid: " << join_numbers(cfg.l_grid) << '\n';
  if (!cfg.k_grid.empty())
    out << "# K grid: " << join_numbers(cfg.k_grid) << '\n';
  out << "# threads: " << cfg.threads << '\n';
  out << "# candidates: "
      << (cfg.distance2_candidates ? "distance<=2" : "all-non-edges") << '\n';
  out << "# nodes: " << report.n_nodes << '\n';
  out << "# links: " << report.n_links << '\n';
}

ordered_json config_json(const EvalConfig& cfg) {
  ordered_json j;
  j["task"] = task_name(cfg.task);
  ordered_json names = ordered_json::array();
  for (IndexKind k : cfg.indices) names.push_back(std::string(index_name(k)));
  j["indices"] = std::move(names);
  j["probe"] = cfg.fraction;
  j["runs"] = cfg.runs;
  j["seed"] = cfg.base_seed;
  j["L"] = cfg.L;
  j["l_grid"] = cfg.l_grid;
  j["k_grid"] = cfg.k_grid;
  j["epsilon_lp"] = cfg.epsilon_lp;
  j["clamp_eps"] = cfg.clamp_eps;
  j["threads"] = cfg.threads;
  j["distance2_candidates"] = cfg.distance2_candidates;
  return j;
}

}  // namespace

void write_benchmark_csv(std::ostream& out, const BenchmarkReport& report,
                         const ReportHeader& header) {
  write_common_header(out, header);
  write_config_header(out, report);
  const EvalConfig& cfg = report.config;
  const std::string task = task_name(cfg.task);
  out << "index,task,metric,L,mean,stdev,runs\n";
  for (const IndexResult& res : report.results) {
    std::string_view name = index_name(res.kind);
    std::size_t runs = res.runs.size();
    out << name << ',' << task << ",precision," << cfg.L << ','
        << fmt(res.precision.mean) << ',' << fmt(res.precision.stdev) << ','
        << runs << '\n';
    for (std::size_t gi = 0; gi < cfg.l_grid.size(); ++gi) {
      if (cfg.l_grid[gi] == cfg.L) continue;  // already emitted as headline
      out << name << ',' << task << ",precision," << cfg.l_grid[gi] << ','
          << fmt(res.curve[gi].mean) << ',' << fmt(res.curve[gi].stdev) << ','
          << runs << '\n';
    }
    out << name << ',' << task << ",aup,," << fmt(res.aup.mean) << ','
        << fmt(res.aup.stdev) << ',' << runs << '\n';
    for (const HitKSummary& hk : res.hitk)
      out << name << ',' << task << ",needed_L," << hk.K << ','
          << fmt_or_empty(hk.needed_L.mean) << ','
          << fmt_or_empty(hk.needed_L.stdev) << ',' << hk.reachable_runs
          << '\n';
  }
}

void write_benchmark_json(std::ostream& out, const BenchmarkReport& report,
                          const ReportHeader& header) {
  const EvalConfig& cfg = report.config;
  ordered_json doc;
  doc["version"] = std::string(kVersion);
  doc["command"] = header.command;
  doc["input"] = header.input_path;
  doc["n_nodes"] = report.n_nodes;
  doc["n_links"] = report.n_links;
  doc["config"] = config_json(cfg);
  ordered_json results = ordered_json::array();
  for (const IndexResult& res : report.results) {
    ordered_json r;
    r["index"] = std::string(index_name(res.kind));
    r["precision"] = {{"mean", res.precision.mean},
                      {"stdev", res.precision.stdev}};
    r["aup"] = {{"mean", res.aup.mean}, {"stdev", res.aup.stdev}};
    ordered_json curve = ordered_json::array();
    for (std::size_t gi = 0; gi < cfg.l_grid.size(); ++gi)
      curve.push_back({{"L", cfg.l_grid[gi]},
                       {"mean", res.curve[gi].mean},
                       {"stdev", res.curve[gi].stdev}});
    r["curve"] = std::move(curve);
    if (!res.hitk.empty()) {
      ordered_json hitk = ordered_json::array();
      for (const HitKSummary& hk : res.hitk)
        hitk.push_back({{"K", hk.K},
                        {"mean", hk.needed_L.mean},
                        {"stdev", hk.needed_L.stdev},
                        {"reachable_runs", hk.reachable_runs}});
      r["hitk"] = std::move(hitk);
    }
    ordered_json runs = ordered_json::array();
    for (const RunDetail& run : res.runs) {
      ordered_json rj;
      rj["seed"] = run.seed;
      rj["probe_size"] = run.probe_size;
      rj["precision"] = run.precision;
      rj["aup"] = run.aup;
      rj["curve"] = run.curve;
      if (!run.needed_L.empty()) rj["needed_L"] = run.needed_L;
      if (cfg.task == Task::personalized)
        rj["nodes_evaluated"] = run.nodes_evaluated;
      runs.push_back(std::move(rj));
    }
    r["runs"] = std::move(runs);
    results.push_back(std::move(r));
  }
  doc["results"] = std::move(results);
  out << doc.dump(2) << '\n';
}

void write_stats_report_csv(std::ostream& out, const NetworkStats& stats,
                            const ReportHeader& header) {
  write_common_header(out, header);
  write_stats_csv(out, stats);
}

void write_stats_report_json(std::ostream& out, const NetworkStats& stats,
                             const ReportHeader& header) {
  ordered_json doc;
  doc["version"] = std::string(kVersion);
  doc["command"] = header.command;
  doc["input"] = header.input_path;
  ordered_json s;
  s["n_nodes"] = stats.n_nodes;
  s["n_links"] = stats.n_links;
  s["avg_shortest_distance"] = stats.avg_shortest_distance;
  s["avg_degree"] = stats.avg_degree;
  s["heterogeneity"] = stats.heterogeneity;
  s["avg_node_clustering"] = stats.avg_node_clustering;
  s["avg_link_clustering"] = stats.avg_link_clustering;
  s["assortativity"] = stats.assortativity;
  s["density"] = stats.density;
  doc["stats"] = std::move(s);
  out << doc.dump(2) << '\n';
}

void write_predictions_csv(std::ostream& out, const Graph& g, IndexKind kind,
                           std::span<const ScoredPair> ranked,
                           const ReportHeader& header) {
  write_common_header(out, header);
  out << "# index: " << index_name(kind) << '\n';
  write_scores_csv(out, g, kind, ranked);
}

void write_predictions_json(std::ostream& out, const Graph& g, IndexKind kind,
                            std::span<const ScoredPair> ranked,
                            const ReportHeader& header) {
  ordered_json doc;
  doc["version"] = std::string(kVersion);
  doc["command"] = header.command;
  doc["input"] = header.input_path;
  doc["index"] = std::string(index_name(kind));
  ordered_json rows = ordered_json::array();
  for (const ScoredPair& sp : ranked)
    rows.push_back({{"x", g.label(sp.x)},
                    {"y", g.label(sp.y)},
                    {"score", sp.score}});
  doc["predictions"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace linkpred
