// linkpred: network statistics, link prediction, and benchmark evaluation
// over undirected edge lists.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linkpred/clustering.hpp"
#include "linkpred/evaluation.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/indices.hpp"
#include "linkpred/report.hpp"
#include "linkpred/stats.hpp"

using namespace linkpred;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CommonOpts {
  std::string input;
  std::string out;
  std::string format = "csv";
};

struct EvalOpts {
  CommonOpts common;
  std::string indices = "all";
  std::string task;
  std::string grid;
  std::string distance2 = "off";
  std::string config_path;
  double probe = 0.1;
  std::size_t runs = 30;
  std::uint64_t seed = 1;
  std::size_t L = 0;
  unsigned threads = 1;
};

struct PredictOpts {
  CommonOpts common;
  std::string index;
  std::string node;
  std::string distance2 = "off";
  std::size_t L = 0;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--input", opts->input, "edge-list file (two labels per line)")
      ->required();
  cmd->add_option("--out", opts->out, "write the report here instead of stdout");
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_eval(CLI::App* cmd, EvalOpts* opts, const char* grid_help) {
  add_common(cmd, &opts->common);
  cmd->add_option("--index", opts->indices,
                  "comma-separated index list, or 'all'")
      ->capture_default_str();
  cmd->add_option("--probe", opts->probe,
                  "fraction of links hidden as the probe set")
      ->capture_default_str();
  cmd->add_option("--runs", opts->runs, "independent splits to average over")
      ->capture_default_str();
  cmd->add_option("--seed", opts->seed, "base seed; run r uses seed + r")
      ->capture_default_str();
  cmd->add_option("--L", opts->L, "headline list length (0 = auto)");
  cmd->add_option("--grid", opts->grid, grid_help);
  cmd->add_option("--task", opts->task,
                  "evaluation task; must match the subcommand");
  cmd->add_option("--threads", opts->threads, "scoring threads")
      ->capture_default_str();
  cmd->add_option("--distance2-candidates", opts->distance2,
                  "restrict candidates to pairs sharing a common neighbor")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  cmd->add_option("--config", opts->config_path,
                  "key=value file supplying any of the options above; "
                  "flags given on the command line win");
}

bool parse_on_off(const std::string& value) { return value == "on"; }

std::vector<std::size_t> parse_grid(const std::string& text) {
  std::vector<std::size_t> grid;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(start, comma - start);
    try {
      std::size_t pos = 0;
      unsigned long v = std::stoul(token, &pos);
      if (pos != token.size() || v == 0) throw std::invalid_argument(token);
      grid.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("bad grid entry '" + token +
                        "': expected positive integers");
    }
    start = comma + 1;
  }
  if (grid.empty()) throw DomainError("empty grid");
  return grid;
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Fills option values from a key=value file; a flag given on the command
// line keeps its value, so the file only replaces untouched defaults.
void apply_config_file(const CLI::App& cmd, EvalOpts& opts) {
  if (opts.config_path.empty()) return;
  std::ifstream in(opts.config_path);
  if (!in) throw IoError("cannot open config file: " + opts.config_path);
  auto given = [&](const char* flag) { return cmd.count(flag) > 0; };
  auto as_number = [](const std::string& key, const std::string& value) {
    try {
      std::size_t pos = 0;
      double v = std::stod(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
      return v;
    } catch (const std::exception&) {
      throw DomainError("config value for '" + key + "' is not a number: '" +
                        value + "'");
    }
  };
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string entry = trimmed(line);
    if (entry.empty() || entry[0] == '#') continue;
    std::size_t eq = entry.find('=');
    if (eq == std::string::npos)
      throw DomainError("config line " + std::to_string(line_no) +
                        ": expected key=value, got '" + entry + "'");
    std::string key = trimmed(entry.substr(0, eq));
    std::string value = trimmed(entry.substr(eq + 1));
    if (key == "index") {
      if (!given("--index")) opts.indices = value;
    } else if (key == "probe") {
      if (!given("--probe")) opts.probe = as_number(key, value);
    } else if (key == "runs") {
      if (!given("--runs"))
        opts.runs = static_cast<std::size_t>(as_number(key, value));
    } else if (key == "seed") {
      if (!given("--seed"))
        opts.seed = static_cast<std::uint64_t>(as_number(key, value));
    } else if (key == "L") {
      if (!given("--L"))
        opts.L = static_cast<std::size_t>(as_number(key, value));
    } else if (key == "grid") {
      if (!given("--grid")) opts.grid = value;
    } else if (key == "task") {
      if (!given("--task")) opts.task = value;
    } else if (key == "threads") {
      if (!given("--threads"))
        opts.threads = static_cast<unsigned>(as_number(key, value));
    } else if (key == "distance2-candidates") {
      if (value != "on" && value != "off")
        throw DomainError("config value for 'distance2-candidates' must be "
                          "on or off, got '" + value + "'");
      if (!given("--distance2-candidates")) opts.distance2 = value;
    } else if (key == "format") {
      if (value != "csv" && value != "json")
        throw DomainError("config value for 'format' must be csv or json, "
                          "got '" + value + "'");
      if (!given("--format")) opts.common.format = value;
    } else if (key == "out") {
      if (!given("--out")) opts.common.out = value;
    } else {
      throw DomainError("config line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    }
  }
}

void emit(const std::string& out_path,
          const std::function<void(std::ostream&)>& writer) {
  if (out_path.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw IoError("cannot write output file: " + out_path);
  writer(file);
}

Graph load_input(const std::string& path) {
  auto start = Clock::now();
  LoadReport rep;
  Graph g = load_edge_list_file(path, &rep);
  std::fprintf(stderr, "loaded %u nodes, %zu links in %.3fs", g.node_count(),
               g.edge_count(), seconds_since(start));
  if (rep.self_loops_dropped || rep.duplicates_merged)
    std::fprintf(stderr, " (dropped %zu self-loops, merged %zu duplicates)",
                 rep.self_loops_dropped, rep.duplicates_merged);
  std::fprintf(stderr, "\n");
  return g;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t next = std::min({row[j] + 1, row[j - 1] + 1,
                                   diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = row[j];
      row[j] = next;
    }
  }
  return row[b.size()];
}

std::string suggest_label(const Graph& g, const std::string& query) {
  std::size_t best = query.size() + 1;
  std::string pick;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    std::size_t d = edit_distance(query, g.label(v));
    if (d < best) {
      best = d;
      pick = g.label(v);
    }
  }
  if (!pick.empty() && best <= std::max<std::size_t>(2, query.size() / 3))
    return "; did you mean '" + pick + "'?";
  return "";
}

int cmd_stats(const CommonOpts& opts) {
  Graph g = load_input(opts.input);
  auto start = Clock::now();
  NetworkStats stats = network_stats(g);
  std::fprintf(stderr, "stats computed in %.3fs\n", seconds_since(start));
  ReportHeader header{"stats", opts.input};
  emit(opts.out, [&](std::ostream& out) {
    if (opts.format == "json")
      write_stats_report_json(out, stats, header);
    else
      write_stats_report_csv(out, stats, header);
  });
  return 0;
}

int cmd_predict(const PredictOpts& opts) {
  std::vector<IndexKind> kinds = parse_index_list(opts.index);
  if (kinds.size() != 1)
    throw DomainError("predict takes exactly one index");
  IndexKind kind = kinds[0];
  Graph g = load_input(opts.common.input);
  bool personalized = !opts.node.empty();
  std::size_t L = opts.L != 0 ? opts.L
                  : personalized ? 5
                  : (g.edge_count() < 1000 ? 20 : 100);

  auto start = Clock::now();
  ClusteringProfile profile(g);
  IndexConfig icfg{kind};
  std::vector<ScoredPair> ranked;
  if (personalized) {
    NodeId v;
    if (auto found = g.find_label(opts.node)) {
      v = *found;
    } else {
      throw LookupError("unknown node '" + opts.node + "'" +
                        suggest_label(g, opts.node));
    }
    ScoreFn scorer = make_scorer(profile, icfg);
    std::vector<ScoredPair> scored;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (u == v || g.has_edge(u, v)) continue;
      scored.push_back({std::min(u, v), std::max(u, v), scorer(v, u)});
    }
    // tied scores go to the smaller candidate id = canonical pair order
    std::sort(scored.begin(), scored.end(),
              [v](const ScoredPair& a, const ScoredPair& b) {
                if (a.score != b.score) return a.score > b.score;
                NodeId ua = a.x == v ? a.y : a.x;
                NodeId ub = b.x == v ? b.y : b.x;
                return ua < ub;
              });
    ranked = std::move(scored);
  } else {
    std::vector<Edge> candidates =
        parse_on_off(opts.distance2)
            ? non_edges_within(g, kind == IndexKind::LocalPath ? 3 : 2)
            : all_non_edges(g);
    ranked = rank_predictions(
        score_all_candidates(profile, icfg, candidates, opts.threads));
  }
  std::fprintf(stderr, "scored %zu candidate pairs in %.3fs\n", ranked.size(),
               seconds_since(start));
  if (L > ranked.size()) {
    std::fprintf(stderr,
                 "note: requested top %zu but only %zu candidate pairs "
                 "exist; printing all of them\n",
                 L, ranked.size());
    L = ranked.size();
  }
  ranked.resize(L);

  ReportHeader header{"predict", opts.common.input};
  emit(opts.common.out, [&](std::ostream& out) {
    if (opts.common.format == "json")
      write_predictions_json(out, g, kind, ranked, header);
    else
      write_predictions_csv(out, g, kind, ranked, header);
  });
  return 0;
}

int cmd_eval(const EvalOpts& opts, Task task, bool grid_is_k,
             const std::string& command) {
  if (!opts.task.empty()) {
    std::string want = task == Task::globalized ? "globalized" : "personalized";
    if (opts.task != want)
      throw DomainError("this command runs the " + want +
                        " task; --task " + opts.task + " conflicts with it");
  }
  EvalConfig cfg;
  cfg.task = task;
  cfg.indices = parse_index_list(opts.indices);
  cfg.fraction = opts.probe;
  cfg.runs = opts.runs;
  cfg.base_seed = opts.seed;
  cfg.L = opts.L;
  cfg.threads = opts.threads;
  cfg.distance2_candidates = parse_on_off(opts.distance2);
  if (!opts.grid.empty()) {
    if (grid_is_k)
      cfg.k_grid = parse_grid(opts.grid);
    else
      cfg.l_grid = parse_grid(opts.grid);
  }

  Graph g = load_input(opts.common.input);
  auto start = Clock::now();
  BenchmarkReport report = run_benchmark(g, cfg);
  double total = seconds_since(start);
  std::fprintf(stderr, "%zu runs x %zu indices in %.3fs (%.3fs/run)\n",
               report.config.runs, report.config.indices.size(), total,
               total / static_cast<double>(std::max<std::size_t>(
                           1, report.config.runs)));

  ReportHeader header{command, opts.common.input};
  emit(opts.common.out, [&](std::ostream& out) {
    if (opts.common.format == "json")
      write_benchmark_json(out, report, header);
    else
      write_benchmark_csv(out, report, header);
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"link prediction from local clustering structure"};
  app.require_subcommand(1);

  CommonOpts stats_opts;
  CLI::App* stats = app.add_subcommand("stats", "network summary statistics");
  add_common(stats, &stats_opts);

  PredictOpts predict_opts;
  CLI::App* predict =
      app.add_subcommand("predict", "rank the most likely missing links");
  add_common(predict, &predict_opts.common);
  predict->add_option("--index", predict_opts.index, "similarity index")
      ->required();
  predict->add_option("--node", predict_opts.node,
                      "rank candidates for this node only");
  predict->add_option("--L", predict_opts.L, "list length (0 = auto)");
  predict->add_option("--threads", predict_opts.threads, "scoring threads");
  predict
      ->add_option("--distance2-candidates", predict_opts.distance2,
                   "restrict candidates to pairs sharing a common neighbor")
      ->check(CLI::IsMember({"on", "off"}));

  EvalOpts global_opts;
  CLI::App* global = app.add_subcommand(
      "eval-global", "globalized top-L benchmark over repeated splits");
  add_eval(global, &global_opts, "comma-separated L grid for the aup curve");

  EvalOpts personal_opts;
  CLI::App* personal = app.add_subcommand(
      "eval-personal", "per-node top-L benchmark over repeated splits");
  add_eval(personal, &personal_opts,
           "comma-separated L grid for the aup curve");

  EvalOpts hitk_opts;
  CLI::App* hitk = app.add_subcommand(
      "hitk", "ranks needed to recover the first K probe links");
  add_eval(hitk, &hitk_opts, "comma-separated K grid for needed-L");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (stats->parsed()) return cmd_stats(stats_opts);
    if (predict->parsed()) return cmd_predict(predict_opts);
    if (global->parsed()) {
      apply_config_file(*global, global_opts);
      return cmd_eval(global_opts, Task::globalized, false, "eval-global");
    }
    if (personal->parsed()) {
      apply_config_file(*personal, personal_opts);
      return cmd_eval(personal_opts, Task::personalized, false,
                      "eval-personal");
    }
    if (hitk->parsed()) {
      apply_config_file(*hitk, hitk_opts);
      return cmd_eval(hitk_opts, Task::globalized, true, "hitk");
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const LookupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
