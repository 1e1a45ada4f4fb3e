#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <utility>
#include <vector>

#include "qclique/bench.hpp"
#include "qclique/circuit.hpp"
#include "qclique/dicke_aa.hpp"
#include "qclique/graph.hpp"
#include "qclique/oracles.hpp"
#include "qclique/statevector.hpp"
#include "qclique/verify.hpp"

namespace py = pybind11;
using namespace qclique;

namespace {

Graph graph_from_pairs(int node_count, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back(make_edge(a, b));
  return Graph(node_count, std::move(edges));
}

std::vector<std::pair<int, int>> edges_as_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) out.emplace_back(e.a, e.b);
  return out;
}

std::vector<std::vector<std::pair<int, int>>> partition_as_lists(const EdgePartition& p) {
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const OneFactor& f : p.classes) {
    std::vector<std::pair<int, int>> cls;
    for (const Edge& e : f) cls.emplace_back(e.a, e.b);
    out.push_back(std::move(cls));
  }
  return out;
}

py::dict histogram_to_dict(const MeasurementHistogram& hist) {
  py::dict counts;
  for (const auto& [value, count] : hist.counts) counts[py::int_(value)] = count;
  py::dict out;
  out["register"] = hist.register_name;
  out["register_size"] = hist.register_size;
  out["shots"] = hist.shots;
  out["counts"] = counts;
  return out;
}

std::vector<std::complex<double>> run_on_basis(const Circuit& c, std::uint64_t idx_value) {
  const Register& idx = c.register_named("idx");
  Statevector s = run(c, basis_state(c.qubit_count(), idx_value << idx.offset));
  return s.amplitudes();
}

py::dict sample_circuit(const Circuit& c, std::uint64_t idx_value, const std::string& reg,
                        long long shots, std::uint64_t seed) {
  const Register& idx = c.register_named("idx");
  Statevector s = run(c, basis_state(c.qubit_count(), idx_value << idx.offset));
  return histogram_to_dict(sample_register(s, c.register_named(reg), shots, seed));
}

}  // namespace

PYBIND11_MODULE(_qclique, m) {
  m.doc() = "Clique-search circuits over 1-factorization layering, with an exact statevector "
            "simulator and the induced-subgraph benchmark.";

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_pairs), py::arg("node_count"), py::arg("edges"))
      .def_static("complete", &Graph::complete, py::arg("n"))
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &edges_as_pairs)
      .def("has_edge", &Graph::has_edge, py::arg("a"), py::arg("b"))
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.node_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<AugmentedGraph>(m, "AugmentedGraph")
      .def_readonly("graph", &AugmentedGraph::graph)
      .def_readonly("apex_count", &AugmentedGraph::apex_count)
      .def_readonly("original_n", &AugmentedGraph::original_n)
      .def_property_readonly("total", &AugmentedGraph::total);

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("qubit_count", &Circuit::qubit_count)
      .def_property_readonly("layer_count", &Circuit::layer_count)
      .def_property_readonly("gate_count", &Circuit::gate_count)
      .def("dump", [](const Circuit& c) { return dump(c); })
      .def("depth_report", [](const Circuit& c) {
        DepthReport rep = depth(c);
        py::dict out;
        out["layer_count"] = rep.layer_count;
        out["weighted_depth"] = rep.weighted_depth;
        out["non_physical"] = rep.contains_nonphysical;
        return out;
      });

  m.def("one_factorization",
        [](int n) { return partition_as_lists(one_factorization(n)); }, py::arg("n"));
  m.def("partition_edges",
        [](const Graph& g) { return partition_as_lists(partition_edges(g)); }, py::arg("graph"));
  m.def("list_k_cliques", &list_k_cliques, py::arg("graph"), py::arg("k"));
  m.def("random_induced_subgraph",
        [](const Graph& g, int n, std::uint64_t seed) {
          InducedSubgraph sub = random_induced_subgraph(g, n, seed);
          return py::make_tuple(sub.graph, sub.original_nodes);
        },
        py::arg("graph"), py::arg("n"), py::arg("seed"));
  m.def("apex_count_for", &apex_count_for, py::arg("k"));
  m.def("augment_apex", &augment_apex, py::arg("graph"), py::arg("k"));
  m.def("generate_synthetic", &generate_synthetic, py::arg("n_total"), py::arg("density"),
        py::arg("seed"));
  m.def("load_edge_list",
        [](const std::string& path, bool one_based, bool has_header) {
          auto r = load_edge_list(path, {one_based, has_header});
          return py::make_tuple(r.graph, r.dropped_self_loops, r.dropped_duplicates);
        },
        py::arg("path"), py::arg("one_based") = false, py::arg("has_header") = false);

  m.def("build_edge_detector_naive", &build_edge_detector_naive, py::arg("graph"));
  m.def("build_edge_detector", &build_edge_detector, py::arg("graph"));
  m.def("build_alpha", &build_alpha, py::arg("graph"));
  m.def("build_input_preparator", &build_input_preparator, py::arg("n"));
  m.def("build_gamma", py::overload_cast<const AugmentedGraph&>(&build_gamma), py::arg("graph"));
  m.def("build_gamma_raw", py::overload_cast<const Graph&>(&build_gamma), py::arg("graph"));
  m.def("build_exact_marking_oracle", &build_exact_marking_oracle, py::arg("graph"), py::arg("k"));
  m.def("build_dicke_prep", &build_dicke_prep, py::arg("n"), py::arg("k"));
  m.def("build_search_prep",
        [](int n, int k) { return build_search_prep(make_search_space_spec(n, k)); }, py::arg("n"),
        py::arg("k"));

  m.def("alpha_overlap", &alpha_overlap, py::arg("graph"), py::arg("subgraph_nodes"));
  m.def("run_on_basis", &run_on_basis, py::arg("circuit"), py::arg("idx_value"),
        "Amplitudes after running the circuit on a basis input placed on idx (qubit 0 is the "
        "least significant bit of the state index).");
  m.def("sample", &sample_circuit, py::arg("circuit"), py::arg("idx_value"),
        py::arg("register_name"), py::arg("shots"), py::arg("seed"));

  m.def("optimal_iterations", &optimal_iterations, py::arg("search_space"), py::arg("solutions"));
  m.def("aa_iteration_cap", &aa_iteration_cap, py::arg("n"), py::arg("k"));
  m.def("run_aa",
        [](const Circuit& prep, const Circuit& oracle, int iterations, long long shots,
           std::uint64_t seed) {
          return histogram_to_dict(run_aa(prep, oracle, iterations, shots, seed));
        },
        py::arg("prep"), py::arg("oracle"), py::arg("iterations"), py::arg("shots"),
        py::arg("seed"));

  m.def("run_benchmark",
        [](const std::string& source, double density, int total_nodes, int n, int k, int instances,
           int stop_after_cliqueful, long long shots, int top_window, std::uint64_t seed,
           const std::string& oracle) {
          ExperimentConfig cfg;
          if (source.empty()) {
            cfg.source = GraphSource::synthetic(density, total_nodes);
          } else {
            cfg.source = GraphSource::file(source);
          }
          cfg.n = n;
          cfg.k = k;
          cfg.instances = instances;
          cfg.stop_after_cliqueful = stop_after_cliqueful;
          cfg.shots = shots;
          cfg.top_window = top_window;
          cfg.seed = seed;
          cfg.oracle = oracle == "exact" ? OracleKind::ExactMark : OracleKind::Gamma;
          BenchResult result = run_benchmark(cfg);
          const CellAggregate& cell = result.report.cells.at(0);
          py::dict out;
          out["n"] = cell.n;
          out["k"] = cell.k;
          out["qubits"] = cell.qubits;
          out["iteration_cap"] = cell.iteration_cap;
          out["generated"] = cell.generated;
          out["with_clique"] = cell.with_clique;
          out["successes"] = cell.successes;
          out["success_rate"] = cell.success_rate;
          if (cell.geomean_ratio) out["geomean_ratio"] = *cell.geomean_ratio;
          else out["geomean_ratio"] = py::none();
          py::list records;
          for (const auto& r : result.records) {
            py::dict rec;
            rec["instance"] = r.instance_id;
            rec["original_nodes"] = r.original_nodes;
            rec["clique_count"] = r.clique_count;
            rec["success"] = r.success;
            rec["gamma_iterations"] =
                r.gamma_iterations ? py::cast(*r.gamma_iterations) : py::none();
            rec["baseline_iterations"] =
                r.baseline_iterations ? py::cast(*r.baseline_iterations) : py::none();
            rec["ratio"] = r.ratio ? py::cast(*r.ratio) : py::none();
            records.append(rec);
          }
          out["records"] = records;
          return out;
        },
        py::arg("source") = "", py::arg("density") = 0.5, py::arg("total_nodes") = 60,
        py::arg("n") = 6, py::arg("k") = 3, py::arg("instances") = 100,
        py::arg("stop_after_cliqueful") = 0, py::arg("shots") = 1000, py::arg("top_window") = 10,
        py::arg("seed") = 1, py::arg("oracle") = "gamma");

  m.def("verify", [](const std::string& suite) {
    SuiteResult res = run_suite(suite);
    py::dict out;
    out["suite"] = res.name;
    out["passed"] = res.passed;
    out["detail"] = res.detail;
    return out;
  });
  m.def("suite_names", &suite_names);
}
