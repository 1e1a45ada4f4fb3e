// Command-line front end: circuit construction, verification suites,
// simulation and the clique-search benchmark.
//
// Exit codes: 0 success, 1 check/benchmark failure or runtime error,
// 2 usage error.
#include <algorithm>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qclique/bench.hpp"
#include "qclique/circuit.hpp"
#include "qclique/dicke_aa.hpp"
#include "qclique/graph.hpp"
#include "qclique/oracles.hpp"
#include "qclique/statevector.hpp"
#include "qclique/util.hpp"
#include "qclique/verify.hpp"

namespace {

using namespace qclique;

// Graph sources: "complete:N", "edgeless:N", "synthetic:DENSITY" (with
// --total-nodes and --seed), or a path to an edge-list file.
Graph resolve_graph(const std::string& source, int total_nodes, std::uint64_t seed, bool one_based,
                    bool has_header) {
  if (source.rfind("complete:", 0) == 0) return Graph::complete(std::stoi(source.substr(9)));
  if (source.rfind("edgeless:", 0) == 0) return Graph(std::stoi(source.substr(9)), {});
  if (source.rfind("synthetic:", 0) == 0) {
    return generate_synthetic(total_nodes, std::stod(source.substr(10)), seed);
  }
  auto loaded = load_edge_list(source, {one_based, has_header});
  if (loaded.dropped_self_loops || loaded.dropped_duplicates) {
    std::cerr << "warning: dropped " << loaded.dropped_self_loops << " self-loop(s) and "
              << loaded.dropped_duplicates << " duplicate edge(s) from " << source << "\n";
  }
  return loaded.graph;
}

void write_or_print(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write: " + out_path);
  out << text;
}

std::string partition_text(const EdgePartition& partition) {
  std::string text;
  for (const OneFactor& f : partition.classes) {
    for (size_t i = 0; i < f.size(); ++i) {
      text += (i ? " " : "") + std::to_string(f[i].a) + "-" + std::to_string(f[i].b);
    }
    text += "\n";
  }
  return text;
}

std::string partition_json(const EdgePartition& partition, int n) {
  nlohmann::json doc;
  doc["node_count"] = n;
  doc["classes"] = nlohmann::json::array();
  for (const OneFactor& f : partition.classes) {
    nlohmann::json cls = nlohmann::json::array();
    for (const Edge& e : f) cls.push_back({e.a, e.b});
    doc["classes"].push_back(cls);
  }
  return doc.dump(2) + "\n";
}

struct CircuitRequest {
  std::string kind;
  Graph graph;
  int k = 3;
  int n = 0;  // width override for input-prep / dicke / s0
};

Circuit build_requested(const CircuitRequest& req) {
  if (req.kind == "edge-naive") return build_edge_detector_naive(req.graph);
  if (req.kind == "edge-layered") return build_edge_detector(req.graph);
  if (req.kind == "alpha") return build_alpha(req.graph);
  if (req.kind == "input-prep") {
    return build_input_preparator(req.n > 0 ? req.n : req.graph.node_count());
  }
  if (req.kind == "gamma") return build_gamma(augment_apex(req.graph, req.k));
  if (req.kind == "gamma-raw") return build_gamma(req.graph);
  if (req.kind == "exact-oracle") {
    return build_exact_marking_oracle(augment_apex(req.graph, req.k), req.k);
  }
  if (req.kind == "dicke") {
    int n = req.n > 0 ? req.n : req.graph.node_count();
    return build_dicke_prep(n, req.k);
  }
  if (req.kind == "search-prep") {
    return build_search_prep(make_search_space_spec(req.graph.node_count(), req.k));
  }
  if (req.kind == "s0") {
    int n = req.n > 0 ? req.n : req.graph.node_count();
    Register idx{"idx", 0, n};
    return build_s0(n, idx, {idx});
  }
  throw CLI::ValidationError("--circuit", "unknown circuit kind: " + req.kind);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"1-factorization clique-search circuits: construction, simulation, benchmarks"};
  app.require_subcommand(1);
  app.footer("Simulation width is capped at 26 qubits; override with QCLIQUE_MAX_QUBITS.");

  std::string graph_source;
  int total_nodes = 60;
  bool one_based = false;
  bool has_header = false;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string format = "text";

  auto add_graph_flags = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_source,
                    "complete:N | edgeless:N | synthetic:DENSITY | edge-list path");
    cmd->add_option("--total-nodes", total_nodes, "node count for synthetic sources");
    cmd->add_flag("--one-based", one_based, "edge-list files use 1-based node ids");
    cmd->add_flag("--has-header", has_header, "edge-list files start with a count line");
  };

  // ---- factorize
  auto* factorize = app.add_subcommand("factorize", "1-factorization of the complete graph K_n");
  int fact_n = 0;
  factorize->add_option("--n", fact_n, "node count (even)")->required();
  factorize->add_option("--out", out_path, "write to file instead of stdout");
  factorize->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // ---- partition
  auto* partition = app.add_subcommand("partition", "matching-layer partition of a graph's edges");
  add_graph_flags(partition);
  partition->add_option("--seed", seed, "seed for synthetic sources");
  partition->add_option("--out", out_path);
  partition->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // ---- build
  auto* build = app.add_subcommand("build", "construct a circuit and dump it as text");
  std::string circuit_kind;
  int opt_k = 3;
  int opt_n = 0;
  build->add_option("--circuit", circuit_kind,
                    "edge-naive | edge-layered | alpha | input-prep | gamma | gamma-raw | "
                    "exact-oracle | dicke | search-prep | s0")
      ->required();
  add_graph_flags(build);
  build->add_option("--k", opt_k, "clique size / Hamming weight");
  build->add_option("--n", opt_n, "width override for input-prep/dicke/s0");
  build->add_option("--seed", seed);
  build->add_option("--out", out_path);
  build->add_flag("--depth", "print the depth report instead of the gate dump");

  // ---- verify
  auto* verify_cmd = app.add_subcommand("verify", "run a named check suite");
  std::string suite;
  SuiteOptions suite_options;
  verify_cmd->add_option("suite", suite, "suite name, or 'all'")->required();
  verify_cmd->add_option("--max-n", suite_options.max_n, "factorization range");
  verify_cmd->add_option("--seed", suite_options.seed);
  verify_cmd->add_option("--instances", suite_options.instances,
                         "clique-containing instances per replication cell");
  verify_cmd->add_option("--max-instances", suite_options.max_instances);
  verify_cmd->add_option("--shots", suite_options.shots);
  verify_cmd->add_option("--top-window", suite_options.top_window);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // ---- simulate
  auto* simulate = app.add_subcommand("simulate", "run a built circuit on a basis input");
  std::string idx_bits;
  long long shots = 0;
  std::string sample_reg = "idx";
  int top_window = 10;
  simulate->add_option("--circuit", circuit_kind)->required();
  add_graph_flags(simulate);
  simulate->add_option("--k", opt_k);
  simulate->add_option("--n", opt_n);
  simulate->add_option("--idx", idx_bits, "basis input for the idx register, MSB first");
  simulate->add_option("--shots", shots, "sample the register this many times");
  simulate->add_option("--register", sample_reg, "register to sample (default idx)");
  simulate->add_option("--top", top_window, "histogram entries to print");
  simulate->add_option("--seed", seed);
  simulate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  simulate->add_option("--out", out_path);

  // ---- bench
  auto* bench = app.add_subcommand("bench", "clique-search benchmark over induced subgraphs");
  ExperimentConfig cfg;
  std::string config_path;
  std::string oracle_name = "gamma";
  bench->add_option("--config", config_path, "JSON config; flags override its values");
  add_graph_flags(bench);
  bench->add_option("--n", cfg.n, "induced subgraph size");
  bench->add_option("--k", cfg.k, "clique size");
  bench->add_option("--instances", cfg.instances, "subgraphs to draw");
  bench->add_option("--stop-after", cfg.stop_after_cliqueful,
                    "stop once this many clique-containing instances ran");
  bench->add_option("--shots", cfg.shots);
  bench->add_option("--top-window", cfg.top_window);
  bench->add_option("--seed", cfg.seed);
  bench->add_option("--oracle", oracle_name)->check(CLI::IsMember({"gamma", "exact"}));
  bench->add_option("--out", out_path, "report file");
  bench->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (factorize->parsed()) {
    if (fact_n < 2 || fact_n % 2 != 0) {
      std::cerr << "factorize: --n must be an even integer >= 2 (a complete graph on an odd "
                   "node count has no perfect matching)\n";
      return 2;
    }
    EdgePartition p = one_factorization(fact_n);
    write_or_print(format == "json" ? partition_json(p, fact_n) : partition_text(p), out_path);
    return 0;
  }

  if (partition->parsed()) {
    Graph g = resolve_graph(graph_source, total_nodes, seed, one_based, has_header);
    EdgePartition p = partition_edges(g);
    write_or_print(format == "json" ? partition_json(p, g.node_count()) : partition_text(p),
                   out_path);
    return 0;
  }

  if (build->parsed()) {
    Graph g = graph_source.empty() ? Graph::complete(4)
                                   : resolve_graph(graph_source, total_nodes, seed, one_based,
                                                   has_header);
    Circuit c = build_requested({circuit_kind, std::move(g), opt_k, opt_n});
    if (build->count("--depth")) {
      DepthReport rep = depth(c);
      nlohmann::json doc = {{"layer_count", rep.layer_count},
                            {"weighted_depth", rep.weighted_depth},
                            {"non_physical", rep.contains_nonphysical}};
      for (const auto& [kind, count] : rep.gate_counts) {
        doc["gate_counts"][gate_kind_name(kind)] = count;
      }
      write_or_print(doc.dump(2) + "\n", out_path);
    } else {
      write_or_print(dump(c), out_path);
    }
    return 0;
  }

  if (verify_cmd->parsed()) {
    std::vector<std::string> to_run;
    if (suite == "all") {
      to_run = suite_names();
    } else {
      auto names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite: " << suite << "\navailable:";
        for (const auto& name : names) std::cerr << " " << name;
        std::cerr << " all\n";
        return 2;
      }
      to_run.push_back(suite);
    }
    bool all_passed = true;
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& name : to_run) {
      SuiteResult res = run_suite(name, suite_options);
      all_passed = all_passed && res.passed;
      if (format == "json") {
        doc.push_back({{"suite", res.name.empty() ? name : res.name},
                       {"passed", res.passed},
                       {"detail", res.detail},
                       {"seconds", res.seconds}});
      } else {
        std::printf("%s  %-18s [%.1fs] %s\n", res.passed ? "PASS" : "FAIL", name.c_str(),
                    res.seconds, res.detail.c_str());
        std::fflush(stdout);
      }
    }
    if (format == "json") std::cout << doc.dump(2) << "\n";
    return all_passed ? 0 : 1;
  }

  if (simulate->parsed()) {
    Graph g = graph_source.empty() ? Graph::complete(4)
                                   : resolve_graph(graph_source, total_nodes, seed, one_based,
                                                   has_header);
    Circuit c = build_requested({circuit_kind, std::move(g), opt_k, opt_n});
    if (auto err = validate(c)) throw std::runtime_error("invalid circuit: " + *err);
    std::uint64_t input = 0;
    if (!idx_bits.empty()) {
      const Register& idx = c.register_named("idx");
      if (static_cast<int>(idx_bits.size()) != idx.size) {
        std::cerr << "simulate: --idx needs exactly " << idx.size << " bits\n";
        return 2;
      }
      input = parse_bits(idx_bits) << idx.offset;
    }
    Statevector s = run(c, basis_state(c.qubit_count(), input));

    nlohmann::json doc;
    std::string text;
    if (shots > 0) {
      const Register& reg = c.register_named(sample_reg);
      MeasurementHistogram hist = sample_register(s, reg, shots, seed);
      doc["register"] = reg.name;
      doc["shots"] = shots;
      doc["histogram"] = nlohmann::json::array();
      for (const auto& [value, count] : hist.top(top_window)) {
        doc["histogram"].push_back({{"bits", format_bits(value, reg.size)}, {"count", count}});
        text += format_bits(value, reg.size) + "  " + std::to_string(count) + "\n";
      }
    } else {
      doc["amplitudes"] = nlohmann::json::array();
      int printed = 0;
      for (std::uint64_t i = 0; i < s.dimension() && printed < 64; ++i) {
        std::complex<double> a = s.amplitude(i);
        if (std::abs(a) < 1e-9) continue;
        ++printed;
        doc["amplitudes"].push_back(
            {{"bits", format_bits(i, s.qubit_count())}, {"re", a.real()}, {"im", a.imag()}});
        char line[128];
        std::snprintf(line, sizeof(line), "%s  %+.9f %+.9fi\n",
                      format_bits(i, s.qubit_count()).c_str(), a.real(), a.imag());
        text += line;
      }
    }
    write_or_print(format == "json" ? doc.dump(2) + "\n" : text, out_path);
    return 0;
  }

  if (bench->parsed()) {
    if (!config_path.empty()) {
      ExperimentConfig from_file = load_config_json(config_path);
      // flags given on the command line override file values
      if (!bench->count("--n")) cfg.n = from_file.n;
      if (!bench->count("--k")) cfg.k = from_file.k;
      if (!bench->count("--instances")) cfg.instances = from_file.instances;
      if (!bench->count("--stop-after")) cfg.stop_after_cliqueful = from_file.stop_after_cliqueful;
      if (!bench->count("--shots")) cfg.shots = from_file.shots;
      if (!bench->count("--top-window")) cfg.top_window = from_file.top_window;
      if (!bench->count("--seed")) cfg.seed = from_file.seed;
      if (!bench->count("--oracle")) {
        oracle_name = from_file.oracle == OracleKind::Gamma ? "gamma" : "exact";
      }
      if (!bench->count("--graph")) cfg.source = from_file.source;
    }
    if (bench->count("--graph")) {
      if (graph_source.rfind("synthetic:", 0) == 0) {
        cfg.source = GraphSource::synthetic(std::stod(graph_source.substr(10)), total_nodes);
      } else {
        cfg.source = GraphSource::file(graph_source, {one_based, has_header});
      }
    } else if (config_path.empty()) {
      std::cerr << "bench: provide --graph or --config\n";
      return 2;
    }
    cfg.oracle = oracle_name == "gamma" ? OracleKind::Gamma : OracleKind::ExactMark;

    BenchResult result = run_benchmark(cfg);
    const CellAggregate& cell = result.report.cells.at(0);
    std::printf("n=%d k=%d qubits=%d cap=%d generated=%d with_clique=%d successes=%d "
                "rate=%.1f%% geomean_ratio=%s\n",
                cell.n, cell.k, cell.qubits, cell.iteration_cap, cell.generated, cell.with_clique,
                cell.successes, 100.0 * cell.success_rate,
                cell.geomean_ratio ? std::to_string(*cell.geomean_ratio).c_str() : "n/a");
    if (!out_path.empty()) {
      std::string file_format = format == "text" ? "json" : format;
      export_report(result.report, result.records, out_path, file_format);
      std::printf("report written to %s (%s)\n", out_path.c_str(), file_format.c_str());
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
