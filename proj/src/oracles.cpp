#include "qclique/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "qclique/statevector.hpp"
#include "qclique/util.hpp"

namespace qclique {

namespace {

std::vector<Register> detector_registers(int n) {
  return {{"idx", 0, n}, {"anc", n, n / 2}, {"out", n + n / 2, 1}};
}

std::vector<Register> preparator_registers(int n) {
  return {{"idx", 0, n}, {"inp", n, n}, {"rem", 2 * n, 2}};
}

}  // namespace

Circuit build_edge_detector_naive(const Graph& g) {
  const int n = g.node_count();
  Circuit c(n + 1, {{"idx", 0, n}, {"out", n, 1}});
  for (const Edge& e : g.edges()) {
    c.append_layer({Gate::ccx(e.a, e.b, n)});
  }
  return c;
}

Circuit build_edge_detector(const Graph& g) {
  const int n = g.node_count();
  const int anc = n / 2;
  Circuit c(n + anc + 1, detector_registers(n));
  if (anc == 0) return c;  // fewer than two nodes: no edges, out stays 0
  const int out = n + anc;

  EdgePartition partition = partition_edges(g);
  std::vector<std::vector<Gate>> ccx_layers;
  for (OneFactor factor : partition.classes) {
    std::sort(factor.begin(), factor.end());
    std::vector<Gate> layer;
    for (size_t j = 0; j < factor.size(); ++j) {
      layer.push_back(Gate::ccx(factor[j].a, factor[j].b, n + static_cast<int>(j)));
    }
    ccx_layers.push_back(std::move(layer));
  }

  for (const auto& layer : ccx_layers) c.append_layer(layer);
  std::vector<Control> inverted_anc;
  for (int j = 0; j < anc; ++j) inverted_anc.push_back({n + j, true});
  c.append_layer({Gate::mcx(std::move(inverted_anc), out)});
  c.append_layer({Gate::x(out)});
  for (auto it = ccx_layers.rbegin(); it != ccx_layers.rend(); ++it) c.append_layer(*it);
  return c;
}

Circuit build_alpha(const Graph& g) {
  const int n = g.node_count();
  Circuit c(n, {{"inp", 0, n}});
  for (const OneFactor& factor : partition_edges(g).classes) {
    std::vector<Gate> layer;
    for (const Edge& e : factor) layer.push_back(Gate::cz(e.a, e.b));
    c.append_layer(std::move(layer));
  }
  return c;
}

Circuit build_input_preparator(int n) {
  if (n < 1) throw std::invalid_argument("input preparator needs n >= 1");
  Circuit c(2 * n + 2, preparator_registers(n));
  const int rem0 = 2 * n;
  const int rem1 = 2 * n + 1;

  std::vector<Gate> spread;
  for (int j = 0; j < n; ++j) spread.push_back(Gate::ch(j, n + j));
  c.append_layer(std::move(spread));

  // mod-4 counter of the ones on inp; rem1 is the counter's high bit
  for (int j = 0; j < n; ++j) {
    c.append_layer({Gate::ccx(n + j, rem0, rem1)});
    c.append_layer({Gate::cx(n + j, rem0)});
  }

  // complement the selected inp qubits on components counted 0 or 1 mod 4
  for (int j = 0; j < n; ++j) {
    c.append_layer({Gate{GateKind::CCX, {n + j}, {{j, false}, {rem1, true}}}});
  }
  return c;
}

double alpha_overlap(const Graph& g, const std::vector<int>& subgraph_nodes) {
  if (subgraph_nodes.size() % 4 != 3) {
    throw std::invalid_argument("alpha overlap needs |H| = 3 (mod 4), got " +
                                std::to_string(subgraph_nodes.size()));
  }
  const int n = g.node_count();
  for (int node : subgraph_nodes) {
    if (node < 0 || node >= n) throw std::invalid_argument("subgraph node out of range");
  }
  Circuit ip = build_input_preparator(n);
  Circuit alpha = shifted(build_alpha(g), 2 * n + 2, n, preparator_registers(n));
  SubgraphQuery query{subgraph_nodes};
  Statevector input = run(ip, basis_state(2 * n + 2, query.idx_value()));
  Statevector output = run(alpha, input);
  std::complex<double> overlap = inner_product(input, output);
  return overlap.real();
}

Circuit build_gamma(const Graph& g) {
  const int n = g.node_count();
  if (n < 1) throw std::invalid_argument("gamma needs at least one node");
  const auto regs = preparator_registers(n);
  Circuit ip = build_input_preparator(n);
  Circuit ip_adj = adjoint(ip);
  Circuit alpha = shifted(build_alpha(g), 2 * n + 2, n, regs);

  // Phase -1 exactly on |inp, rem> = |0...0>: conjugate the top rem qubit
  // with X so the multi-controlled Z fires on the all-zero pattern.
  const int t = 2 * n + 1;
  Circuit reflect(2 * n + 2, regs);
  reflect.append_layer({Gate::x(t)});
  std::vector<Control> controls;
  for (int j = n; j < 2 * n + 1; ++j) controls.push_back({j, true});
  reflect.append_layer({Gate::mcz(std::move(controls), t)});
  reflect.append_layer({Gate::x(t)});

  Circuit half = compose(compose(ip, alpha), ip_adj);
  return compose(compose(half, reflect), half);
}

Circuit build_gamma(const AugmentedGraph& ag) { return build_gamma(ag.graph); }

Circuit build_exact_marking_oracle(const AugmentedGraph& ag, int k) {
  const int n = ag.total();
  const int clique_size = k + ag.apex_count;
  auto spec = std::make_shared<DiagonalMarkSpec>();
  spec->register_name = "idx";
  spec->predicate_id = "clique" + std::to_string(clique_size) + "-with-apexes";
  spec->offset = 0;
  spec->size = n;
  if (clique_size <= n) {
    for (const auto& clique : list_k_cliques(ag.graph, clique_size)) {
      bool has_all_apexes = true;
      for (int apex = ag.original_n; apex < n; ++apex) {
        if (!std::binary_search(clique.begin(), clique.end(), apex)) {
          has_all_apexes = false;
          break;
        }
      }
      if (has_all_apexes) spec->marked_values.push_back(SubgraphQuery{clique}.idx_value());
    }
  }
  std::sort(spec->marked_values.begin(), spec->marked_values.end());
  Circuit c(n, {{"idx", 0, n}});
  c.append_layer({Gate::diagonal_mark(std::move(spec))});
  return c;
}

}  // namespace qclique
