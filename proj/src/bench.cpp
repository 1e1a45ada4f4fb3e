#include "qclique/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qclique/dicke_aa.hpp"
#include "qclique/oracles.hpp"
#include "qclique/statevector.hpp"
#include "qclique/util.hpp"

namespace qclique {

EdgeListResult load_edge_list(const std::string& path, const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);

  EdgeListResult result;
  std::vector<Edge> edges;
  int declared_nodes = -1;
  int max_node = -1;
  bool header_pending = options.has_header;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '%' || line[start] == '#') continue;

    std::istringstream ls(line);
    long long a = 0;
    long long b = 0;
    if (!(ls >> a >> b)) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": malformed line: " + line);
    }
    double ignored_weight;
    ls >> ignored_weight;  // optional third numeric token
    std::string trailing;
    if (ls >> trailing) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": malformed line: " + line);
    }

    if (header_pending) {
      header_pending = false;
      if (a < 0 || a > 1'000'000'000LL) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ": bad header node count");
      }
      declared_nodes = static_cast<int>(a);
      continue;
    }
    if (options.one_based) {
      --a;
      --b;
    }
    if (a < 0 || b < 0 || a > 100'000'000LL || b > 100'000'000LL) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": node index out of range");
    }
    if (a == b) {
      ++result.dropped_self_loops;
      continue;
    }
    max_node = std::max(max_node, static_cast<int>(std::max(a, b)));
    edges.push_back(make_edge(static_cast<int>(a), static_cast<int>(b)));
  }

  int nodes = std::max(declared_nodes, max_node + 1);
  size_t before = edges.size();
  result.graph = Graph(nodes, std::move(edges));
  result.dropped_duplicates = static_cast<int>(before) - result.graph.edge_count();
  return result;
}

Graph generate_synthetic(int n_total, double density, std::uint64_t seed) {
  if (density < 0.0 || density > 1.0) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int a = 0; a < n_total; ++a) {
    for (int b = a + 1; b < n_total; ++b) {
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density) edges.push_back(Edge{a, b});
    }
  }
  return Graph(n_total, std::move(edges));
}

namespace {

Graph resolve_source(const ExperimentConfig& cfg) {
  if (cfg.source.kind == GraphSource::Kind::File) {
    return load_edge_list(cfg.source.path, cfg.source.options).graph;
  }
  return generate_synthetic(cfg.source.total_nodes, cfg.source.density, mix_seed(cfg.seed, 0));
}

bool is_clique(const Graph& g, const std::vector<int>& nodes) {
  for (size_t i = 0; i < nodes.size(); ++i) {
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      if (!g.has_edge(nodes[i], nodes[j])) return false;
    }
  }
  return true;
}

// Decodes an idx outcome: apex bits must all be 1 and the original-node
// support must form a k-clique; anything else counts as a miss.
bool outcome_is_clique(std::uint64_t outcome, const Graph& g, int n, int q, int k) {
  const std::uint64_t apex_mask = ((1ULL << q) - 1ULL) << n;
  if ((outcome & apex_mask) != apex_mask) return false;
  std::vector<int> support;
  for (int node = 0; node < n; ++node) {
    if ((outcome >> node) & 1ULL) support.push_back(node);
  }
  if (static_cast<int>(support.size()) != k) return false;
  return is_clique(g, support);
}

}  // namespace

BenchResult run_benchmark(const ExperimentConfig& cfg) {
  if (cfg.k < 1 || cfg.k > cfg.n) throw std::invalid_argument("need 1 <= k <= n");
  if (cfg.top_window < 1 || cfg.shots < cfg.top_window) {
    throw std::invalid_argument("need shots >= top_window >= 1");
  }
  const int q = apex_count_for(cfg.k);
  const int oracle_width =
      cfg.oracle == OracleKind::Gamma ? 2 * (cfg.n + q) + 2 : cfg.n + q;
  if (oracle_width > max_qubits()) {
    throw ResourceError("configuration needs " + std::to_string(oracle_width) +
                        " qubits, above the cap of " + std::to_string(max_qubits()) +
                        " (QCLIQUE_MAX_QUBITS)");
  }

  Graph source = resolve_source(cfg);
  if (cfg.n > source.node_count()) {
    throw std::invalid_argument("subgraph size exceeds source graph node count");
  }

  const std::uint64_t search_space = binomial(cfg.n, cfg.k);
  const AASchedule schedule = make_aa_schedule(cfg.n, cfg.k, cfg.shots, cfg.seed);
  const int cap = schedule.max_iterations;
  const SearchSpaceSpec spec = make_search_space_spec(cfg.n, cfg.k);
  const Circuit prep = build_search_prep(spec);

  BenchResult result;
  result.records.reserve(static_cast<size_t>(cfg.instances));
  CellAggregate cell;
  cell.n = cfg.n;
  cell.k = cfg.k;
  cell.qubits = 2 * (cfg.n + q) + 2;
  cell.iteration_cap = cap;

  std::vector<double> ratios;
  for (int instance = 0; instance < cfg.instances; ++instance) {
    if (cfg.stop_after_cliqueful > 0 && cell.with_clique >= cfg.stop_after_cliqueful) break;
    InducedSubgraph sub =
        random_induced_subgraph(source, cfg.n, mix_seed(cfg.seed, 1 + static_cast<std::uint64_t>(instance)));
    ExperimentRecord rec;
    rec.instance_id = instance;
    rec.original_nodes = sub.original_nodes;
    auto cliques = list_k_cliques(sub.graph, cfg.k);
    rec.clique_count = static_cast<int>(cliques.size());
    if (rec.clique_count == 0) {
      result.records.push_back(std::move(rec));
      continue;
    }
    ++cell.with_clique;
    rec.baseline_iterations =
        optimal_iterations(search_space, static_cast<std::uint64_t>(rec.clique_count));

    AugmentedGraph ag = augment_apex(sub.graph, cfg.k);
    Circuit oracle = cfg.oracle == OracleKind::Gamma ? build_gamma(ag)
                                                     : build_exact_marking_oracle(ag, cfg.k);
    AARunner runner(prep, oracle);
    for (int t = 1; t <= cap; ++t) {
      runner.advance(1);
      std::uint64_t shot_seed =
          mix_seed(cfg.seed, (static_cast<std::uint64_t>(instance) << 16) ^
                                 static_cast<std::uint64_t>(t) ^ 0x5eedULL);
      MeasurementHistogram hist = runner.sample(schedule.shots, shot_seed);
      for (const auto& [outcome, count] : hist.top(cfg.top_window)) {
        if (outcome_is_clique(outcome, sub.graph, cfg.n, q, cfg.k)) {
          rec.success = true;
          break;
        }
      }
      if (rec.success) {
        rec.gamma_iterations = t;
        rec.ratio = static_cast<double>(t) / static_cast<double>(*rec.baseline_iterations);
        break;
      }
    }
    if (rec.success) {
      ++cell.successes;
      ratios.push_back(*rec.ratio);
    }
    result.records.push_back(std::move(rec));
  }

  cell.generated = static_cast<int>(result.records.size());
  cell.success_rate =
      cell.with_clique > 0 ? static_cast<double>(cell.successes) / cell.with_clique : 0.0;
  cell.geomean_ratio = geometric_mean(ratios);
  result.report.config = cfg;
  result.report.cells.push_back(cell);
  return result;
}

std::optional<double> geometric_mean(const std::vector<double>& ratios) {
  if (ratios.empty()) return std::nullopt;
  double log_sum = 0.0;
  for (double r : ratios) {
    if (r <= 0.0) throw std::invalid_argument("geometric mean needs positive inputs");
    log_sum += std::log(r);
  }
  return std::exp(log_sum / static_cast<double>(ratios.size()));
}

namespace {

using nlohmann::json;

json config_to_json(const ExperimentConfig& cfg) {
  json src;
  if (cfg.source.kind == GraphSource::Kind::File) {
    src = {{"kind", "file"},
           {"path", cfg.source.path},
           {"one_based", cfg.source.options.one_based},
           {"has_header", cfg.source.options.has_header}};
  } else {
    src = {{"kind", "synthetic"},
           {"density", cfg.source.density},
           {"total_nodes", cfg.source.total_nodes}};
  }
  return {{"source", src},
          {"n", cfg.n},
          {"k", cfg.k},
          {"instances", cfg.instances},
          {"stop_after_cliqueful", cfg.stop_after_cliqueful},
          {"shots", cfg.shots},
          {"top_window", cfg.top_window},
          {"seed", cfg.seed},
          {"oracle", cfg.oracle == OracleKind::Gamma ? "gamma" : "exact"}};
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig cfg;
  const json& src = j.at("source");
  if (src.at("kind") == "file") {
    cfg.source = GraphSource::file(src.at("path"),
                                   {src.at("one_based").get<bool>(), src.at("has_header").get<bool>()});
  } else {
    cfg.source = GraphSource::synthetic(src.at("density"), src.at("total_nodes"));
  }
  cfg.n = j.at("n");
  cfg.k = j.at("k");
  cfg.instances = j.at("instances");
  cfg.stop_after_cliqueful = j.value("stop_after_cliqueful", 0);
  cfg.shots = j.at("shots");
  cfg.top_window = j.at("top_window");
  cfg.seed = j.at("seed");
  cfg.oracle = j.at("oracle") == "gamma" ? OracleKind::Gamma : OracleKind::ExactMark;
  return cfg;
}

json record_to_json(const ExperimentRecord& r) {
  json j = {{"instance", r.instance_id},
            {"original_nodes", r.original_nodes},
            {"clique_count", r.clique_count},
            {"success", r.success}};
  j["gamma_iterations"] = r.gamma_iterations ? json(*r.gamma_iterations) : json(nullptr);
  j["baseline_iterations"] = r.baseline_iterations ? json(*r.baseline_iterations) : json(nullptr);
  j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
  return j;
}

ExperimentRecord record_from_json(const json& j) {
  ExperimentRecord r;
  r.instance_id = j.at("instance");
  r.original_nodes = j.at("original_nodes").get<std::vector<int>>();
  r.clique_count = j.at("clique_count");
  r.success = j.at("success");
  if (!j.at("gamma_iterations").is_null()) r.gamma_iterations = j.at("gamma_iterations").get<int>();
  if (!j.at("baseline_iterations").is_null()) {
    r.baseline_iterations = j.at("baseline_iterations").get<int>();
  }
  if (!j.at("ratio").is_null()) r.ratio = j.at("ratio").get<double>();
  return r;
}

json cell_to_json(const CellAggregate& c) {
  json j = {{"n", c.n},
            {"k", c.k},
            {"qubits", c.qubits},
            {"iteration_cap", c.iteration_cap},
            {"generated", c.generated},
            {"with_clique", c.with_clique},
            {"successes", c.successes},
            {"success_rate", c.success_rate}};
  j["geomean_ratio"] = c.geomean_ratio ? json(*c.geomean_ratio) : json(nullptr);
  return j;
}

CellAggregate cell_from_json(const json& j) {
  CellAggregate c;
  c.n = j.at("n");
  c.k = j.at("k");
  c.qubits = j.at("qubits");
  c.iteration_cap = j.at("iteration_cap");
  c.generated = j.at("generated");
  c.with_clique = j.at("with_clique");
  c.successes = j.at("successes");
  c.success_rate = j.at("success_rate");
  if (!j.at("geomean_ratio").is_null()) c.geomean_ratio = j.at("geomean_ratio").get<double>();
  return c;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

void export_report(const ExperimentReport& report, const std::vector<ExperimentRecord>& records,
                   const std::string& path, const std::string& format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  if (format == "json") {
    json doc;
    doc["schema_version"] = 1;
    doc["config"] = config_to_json(report.config);
    doc["cells"] = json::array();
    for (const auto& c : report.cells) doc["cells"].push_back(cell_to_json(c));
    doc["records"] = json::array();
    for (const auto& r : records) doc["records"].push_back(record_to_json(r));
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    out << "instance,clique_count,gamma_iterations,baseline_iterations,success,ratio,original_nodes\n";
    for (const auto& r : records) {
      out << r.instance_id << "," << r.clique_count << ",";
      if (r.gamma_iterations) out << *r.gamma_iterations;
      out << ",";
      if (r.baseline_iterations) out << *r.baseline_iterations;
      out << "," << (r.success ? 1 : 0) << ",";
      if (r.ratio) out << format_double(*r.ratio);
      out << ",";
      for (size_t i = 0; i < r.original_nodes.size(); ++i) {
        out << (i ? ";" : "") << r.original_nodes[i];
      }
      out << "\n";
    }
  } else {
    throw std::invalid_argument("unknown report format: " + format);
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

BenchResult import_report_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open report: " + path);
  json doc = json::parse(in);
  BenchResult result;
  result.report.config = config_from_json(doc.at("config"));
  for (const auto& c : doc.at("cells")) result.report.cells.push_back(cell_from_json(c));
  for (const auto& r : doc.at("records")) result.records.push_back(record_from_json(r));
  return result;
}

ExperimentConfig load_config_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  return config_from_json(json::parse(in));
}

std::vector<ExperimentRecord> import_records_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open report: " + path);
  std::vector<ExperimentRecord> records;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    while (fields.size() < 7) fields.emplace_back();
    ExperimentRecord r;
    r.instance_id = std::stoi(fields[0]);
    r.clique_count = std::stoi(fields[1]);
    if (!fields[2].empty()) r.gamma_iterations = std::stoi(fields[2]);
    if (!fields[3].empty()) r.baseline_iterations = std::stoi(fields[3]);
    r.success = fields[4] == "1";
    if (!fields[5].empty()) r.ratio = std::stod(fields[5]);
    if (!fields[6].empty()) {
      std::istringstream ns(fields[6]);
      std::string tok;
      while (std::getline(ns, tok, ';')) r.original_nodes.push_back(std::stoi(tok));
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace qclique
