#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "linkpred/evaluation.hpp"
#include "linkpred/stats.hpp"

namespace linkpred {

inline constexpr std::string_view kVersion = "1.0.0";

// Provenance echoed into every output file; two files with identical headers
// have identical bodies.
struct ReportHeader {
  std::string command;     // e.g. "eval-global"
  std::string input_path;  // as given on the command line
};

// CSV layout (described in the README):
//   header comment lines, then
//   index,task,metric,L,mean,stdev,runs
// with metric one of precision | aup | needed_L. For precision rows L is a
// grid value (plus the headline L), for aup the column is empty, and for
// needed_L it holds K; `runs` counts the contributing runs.
void write_benchmark_csv(std::ostream& out, const BenchmarkReport& report,
                         const ReportHeader& header);
void write_benchmark_json(std::ostream& out, const BenchmarkReport& report,
                          const ReportHeader& header);

void write_stats_report_csv(std::ostream& out, const NetworkStats& stats,
                            const ReportHeader& header);
void write_stats_report_json(std::ostream& out, const NetworkStats& stats,
                             const ReportHeader& header);

// Ranked candidate pairs with labels, as produced by the predict command.
void write_predictions_csv(std::ostream& out, const Graph& g, IndexKind kind,
                           std::span<const ScoredPair> ranked,
                           const ReportHeader& header);
void write_predictions_json(std::ostream& out, const Graph& g, IndexKind kind,
                            std::span<const ScoredPair> ranked,
                            const ReportHeader& header);

}  // namespace linkpred
