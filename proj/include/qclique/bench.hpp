#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qclique/graph.hpp"

namespace qclique {

struct EdgeListOptions {
  bool one_based = false;
  bool has_header = false;  // leading "nodes edges" line
};

struct EdgeListResult {
  Graph graph;
  int dropped_self_loops = 0;
  int dropped_duplicates = 0;
};

// Whitespace-separated "u v" pairs, one edge per line; '%' and '#' start
// comments. A trailing numeric weight token is accepted and ignored.
EdgeListResult load_edge_list(const std::string& path, const EdgeListOptions& options = {});

// G(n, p): each pair present independently with probability `density`.
Graph generate_synthetic(int n_total, double density, std::uint64_t seed);

enum class OracleKind { Gamma, ExactMark };

struct GraphSource {
  enum class Kind { File, Synthetic };
  Kind kind = Kind::Synthetic;
  std::string path;        // File
  EdgeListOptions options; // File
  double density = 0.5;    // Synthetic
  int total_nodes = 60;    // Synthetic

  static GraphSource file(std::string p, EdgeListOptions o = {}) {
    GraphSource s;
    s.kind = Kind::File;
    s.path = std::move(p);
    s.options = o;
    return s;
  }
  static GraphSource synthetic(double density, int total_nodes = 60) {
    GraphSource s;
    s.kind = Kind::Synthetic;
    s.density = density;
    s.total_nodes = total_nodes;
    return s;
  }
};

struct ExperimentConfig {
  GraphSource source;
  int n = 6;
  int k = 3;
  int instances = 100;  // upper bound on generated subgraphs
  // when > 0, stop generating once this many clique-containing instances
  // have been collected
  int stop_after_cliqueful = 0;
  long long shots = 1000;
  int top_window = 10;
  std::uint64_t seed = 1;
  OracleKind oracle = OracleKind::Gamma;
};

// Per-instance outcome. Instances whose subgraph has no k-clique are
// recorded but never simulated: clique_count 0, no iteration counts.
struct ExperimentRecord {
  int instance_id = 0;
  std::vector<int> original_nodes;
  int clique_count = 0;
  std::optional<int> gamma_iterations;
  std::optional<int> baseline_iterations;
  bool success = false;
  std::optional<double> ratio;
};

struct CellAggregate {
  int n = 0;
  int k = 0;
  int qubits = 0;          // 2(n+q)+2 for the full oracle stack
  int iteration_cap = 0;
  int generated = 0;
  int with_clique = 0;
  int successes = 0;
  double success_rate = 0.0;  // successes / with_clique
  std::optional<double> geomean_ratio;  // over successful instances only
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<CellAggregate> cells;
};

struct BenchResult {
  ExperimentReport report;
  std::vector<ExperimentRecord> records;
};

// Runs the full per-instance protocol: draw a random induced subgraph,
// count its k-cliques classically, skip clique-less instances, and for the
// rest sweep the amplification iteration count t = 1, 2, ... up to the cap,
// declaring success at the first t where one of the top_window most
// frequent sampled idx outcomes decodes to a verified k-clique. Rejects
// configurations whose qubit count exceeds the simulation cap before any
// state is allocated.
BenchResult run_benchmark(const ExperimentConfig& config);

// exp(mean(log x)); empty input yields nullopt, non-positive inputs are
// rejected.
std::optional<double> geometric_mean(const std::vector<double>& ratios);

// format is "json" (full document: config echo, cells, records) or "csv"
// (records only, one row each). Both round-trip through the importers.
void export_report(const ExperimentReport& report, const std::vector<ExperimentRecord>& records,
                   const std::string& path, const std::string& format);

BenchResult import_report_json(const std::string& path);
std::vector<ExperimentRecord> import_records_csv(const std::string& path);

// Reads an ExperimentConfig from a JSON file using the same schema as the
// report's config echo.
ExperimentConfig load_config_json(const std::string& path);

}  // namespace qclique
