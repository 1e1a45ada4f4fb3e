#include "qclique/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qclique/bench.hpp"
#include "qclique/dicke_aa.hpp"
#include "qclique/graph.hpp"
#include "qclique/oracles.hpp"
#include "qclique/statevector.hpp"
#include "qclique/util.hpp"

namespace qclique {

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw CheckFailure(msg);
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

// All graphs on n nodes, indexed by a bitmask over the pairs of K_n in
// lexicographic order.
Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++bit) {
      if ((mask >> bit) & 1ULL) edges.push_back(Edge{a, b});
    }
  }
  return Graph(n, std::move(edges));
}

double max_abs_difference(const Statevector& a, const Statevector& b) {
  double worst = 0;
  for (std::uint64_t i = 0; i < a.dimension(); ++i) {
    worst = std::max(worst, std::abs(a.amplitude(i) - b.amplitude(i)));
  }
  return worst;
}

double max_abs_sum(const Statevector& a, const Statevector& b) {
  double worst = 0;
  for (std::uint64_t i = 0; i < a.dimension(); ++i) {
    worst = std::max(worst, std::abs(a.amplitude(i) + b.amplitude(i)));
  }
  return worst;
}

bool nodes_form_clique(const Graph& g, const std::vector<int>& nodes) {
  for (size_t i = 0; i < nodes.size(); ++i) {
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      if (!g.has_edge(nodes[i], nodes[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

SuiteResult suite_factorization(const SuiteOptions& o) {
  SuiteResult res{"factorization"};
  int tested = 0;
  for (int n = 2; n <= o.max_n; n += 2) {
    EdgePartition p = one_factorization(n);
    require(static_cast<int>(p.classes.size()) == n - 1,
            "n=" + std::to_string(n) + ": expected n-1 classes");
    std::set<std::pair<int, int>> seen;
    for (const OneFactor& f : p.classes) {
      require(static_cast<int>(f.size()) == n / 2,
              "n=" + std::to_string(n) + ": class is not a perfect matching");
      std::vector<int> hits(static_cast<size_t>(n), 0);
      for (const Edge& e : f) {
        require(e.a >= 0 && e.b < n && e.a < e.b, "edge endpoints out of range");
        ++hits[static_cast<size_t>(e.a)];
        ++hits[static_cast<size_t>(e.b)];
        require(seen.insert({e.a, e.b}).second,
                "n=" + std::to_string(n) + ": edge appears in two classes");
      }
      for (int h : hits) require(h == 1, "n=" + std::to_string(n) + ": node not covered exactly once");
    }
    require(static_cast<int>(seen.size()) == n * (n - 1) / 2,
            "n=" + std::to_string(n) + ": union misses edges");
    ++tested;
  }
  res.passed = true;
  res.detail = std::to_string(tested) + " even sizes up to n=" + std::to_string(o.max_n) +
               ": n-1 disjoint perfect matchings covering all n(n-1)/2 edges";
  return res;
}

SuiteResult suite_partition(const SuiteOptions& o) {
  SuiteResult res{"partition"};
  // frozen small cases
  {
    EdgePartition p = partition_edges(Graph::complete(4));
    require(p.classes.size() == 3, "K4 should split into 3 classes");
    EdgePartition path = partition_edges(Graph(3, {{0, 1}, {1, 2}}));
    require(path.classes.size() == 2, "path 0-1-2 should split into 2 classes");
    require(path.classes[0] == OneFactor{{1, 2}} && path.classes[1] == OneFactor{{0, 1}},
            "path 0-1-2 classes mismatch");
    require(partition_edges(Graph(5, {})).classes.empty(), "edgeless graph must give 0 classes");
  }
  int graphs = 0;
  for (int n = 2; n <= 9; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      Graph g = generate_synthetic(n, 0.55, mix_seed(o.seed, 90 + static_cast<std::uint64_t>(n * 10 + rep)));
      EdgePartition p = partition_edges(g);
      require(static_cast<int>(p.classes.size()) <= n, "class count exceeds node count");
      std::set<std::pair<int, int>> seen;
      for (const OneFactor& f : p.classes) {
        require(!f.empty(), "empty class kept");
        std::set<int> nodes;
        for (const Edge& e : f) {
          require(nodes.insert(e.a).second && nodes.insert(e.b).second, "class is not a matching");
          require(g.has_edge(e.a, e.b), "class contains a non-edge");
          require(seen.insert({e.a, e.b}).second, "classes overlap");
        }
      }
      require(static_cast<int>(seen.size()) == g.edge_count(), "union differs from edge set");
      ++graphs;
    }
  }
  res.passed = true;
  res.detail = std::to_string(graphs) + " random graphs plus frozen cases: disjoint matchings, full cover";
  return res;
}

SuiteResult suite_cliques(const SuiteOptions& o) {
  SuiteResult res{"cliques"};
  auto reference = [](const Graph& g, int k) {
    // independent path: enumerate every k-subset and test pairwise adjacency
    std::vector<std::vector<int>> out;
    std::vector<int> pick(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int next) {
      if (pos == k) {
        for (int i = 0; i < k; ++i) {
          for (int j = i + 1; j < k; ++j) {
            if (!g.has_edge(pick[static_cast<size_t>(i)], pick[static_cast<size_t>(j)])) return;
          }
        }
        out.push_back(pick);
        return;
      }
      for (int v = next; v < g.node_count(); ++v) {
        pick[static_cast<size_t>(pos)] = v;
        rec(pos + 1, v + 1);
      }
    };
    if (k >= 1 && k <= g.node_count()) rec(0, 0);
    return out;
  };

  std::vector<Graph> graphs;
  graphs.push_back(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  graphs.push_back(Graph::complete(4));
  {
    const Graph k4 = Graph::complete(4);
    std::vector<Edge> k4_minus;
    for (const Edge& e : k4.edges()) {
      if (!(e.a == 0 && e.b == 1)) k4_minus.push_back(e);
    }
    graphs.push_back(Graph(4, k4_minus));
  }
  for (int n = 5; n <= 8; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      graphs.push_back(generate_synthetic(n, 0.6, mix_seed(o.seed, 300 + static_cast<std::uint64_t>(n * 10 + rep))));
    }
  }
  int checked = 0;
  for (const Graph& g : graphs) {
    for (int k = 1; k <= g.node_count(); ++k) {
      auto got = list_k_cliques(g, k);
      auto want = reference(g, k);
      require(got == want, "clique list differs from exhaustive check (n=" +
                               std::to_string(g.node_count()) + ", k=" + std::to_string(k) + ")");
      require(std::is_sorted(got.begin(), got.end()), "clique list not lexicographic");
      ++checked;
    }
  }
  require(list_k_cliques(Graph::complete(4), 3).size() == 4, "K4 must contain 4 triangles");
  res.passed = true;
  res.detail = std::to_string(checked) + " (graph, k) pairs agree with exhaustive subset check";
  return res;
}

// ---------------------------------------------------------------------------

void check_detector_pair(const Graph& g, double tol) {
  const int n = g.node_count();
  Circuit naive = build_edge_detector_naive(g);
  Circuit layered = build_edge_detector(g);
  require(!validate(naive) && !validate(layered), "detector circuit fails validation");
  const int out_naive = n;
  const int out_layered = n + n / 2;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      EdgeQuery query{a, b};
      bool edge = g.has_edge(a, b);
      Statevector got_naive = run(naive, basis_state(naive.qubit_count(), query.idx_value()));
      Statevector want_naive = basis_state(
          naive.qubit_count(), query.idx_value() | (edge ? 1ULL << out_naive : 0ULL));
      require(max_abs_difference(got_naive, want_naive) <= tol, "serial detector answered wrong");

      Statevector got_layered = run(layered, basis_state(layered.qubit_count(), query.idx_value()));
      Statevector want_layered = basis_state(
          layered.qubit_count(), query.idx_value() | (edge ? 1ULL << out_layered : 0ULL));
      require(max_abs_difference(got_layered, want_layered) <= tol,
              "layered detector answered wrong or left ancillas dirty");
    }
  }
}

SuiteResult suite_edge_detectors(const SuiteOptions& o) {
  SuiteResult res{"edge-detectors"};
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    check_detector_pair(graph_from_mask(4, mask), 1e-12);
  }
  for (int i = 0; i < 50; ++i) {
    check_detector_pair(generate_synthetic(6, 0.5, mix_seed(o.seed, 1000 + static_cast<std::uint64_t>(i))),
                        1e-12);
  }
  res.passed = true;
  res.detail = "64 graphs on 4 nodes and 50 seeded graphs on 6 nodes: all queries correct on "
               "both detectors, ancillas restored to 1e-12";
  return res;
}

SuiteResult suite_depth(const SuiteOptions& o) {
  SuiteResult res{"depth"};
  for (int n = 4; n <= 20; ++n) {
    Graph g = Graph::complete(n);
    DepthReport naive = depth(build_edge_detector_naive(g));
    require(naive.layer_count == g.edge_count(),
            "serial detector layer count != m at n=" + std::to_string(n));
  }
  for (int i = 0; i < 5; ++i) {
    Graph g = generate_synthetic(9, 0.5, mix_seed(o.seed, 2000 + static_cast<std::uint64_t>(i)));
    require(depth(build_edge_detector_naive(g)).layer_count == g.edge_count(),
            "serial detector layer count != m on random graph");
  }

  // frozen small case: 3 matching layers, inverted-control MCX over 2
  // ancillas (cost 2), X, then the 3 reset layers
  require(depth(build_edge_detector(Graph::complete(4))).weighted_depth == 9,
          "layered K4 weighted depth changed");
  require(depth(build_edge_detector_naive(Graph::complete(4))).layer_count == 6,
          "serial K4 layer count changed");

  std::vector<std::int64_t> weights;
  for (int n = 4; n <= 20; n += 2) {
    DepthReport rep = depth(build_edge_detector(Graph::complete(n)));
    require(rep.weighted_depth <= 2 * (n - 1) + n / 2 + 2,
            "layered weighted depth above the linear bound at n=" + std::to_string(n));
    weights.push_back(rep.weighted_depth);
  }
  for (size_t i = 0; i + 2 < weights.size(); ++i) {
    require(weights[i + 2] - 2 * weights[i + 1] + weights[i] == 0,
            "layered weighted depth is not exactly linear over even n");
  }
  res.passed = true;
  std::ostringstream detail;
  detail << "serial layer count = m everywhere; layered weighted depth on K_n (even n=4..20) is "
            "exactly linear: ";
  for (size_t i = 0; i < weights.size(); ++i) detail << (i ? "," : "") << weights[i];
  res.detail = detail.str();
  return res;
}

SuiteResult suite_alpha_triangle(const SuiteOptions&) {
  SuiteResult res{"alpha-triangle"};
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    Graph g = graph_from_mask(3, mask);
    double overlap = alpha_overlap(g, {0, 1, 2});
    double expected = mask == 0 ? 1.0 : (mask == 7 ? -1.0 : 0.0);
    require(std::abs(overlap - expected) <= 1e-10,
            "3-node graph mask=" + std::to_string(mask) + ": overlap " + fmt(overlap) +
                " != " + fmt(expected));
  }
  res.passed = true;
  res.detail = "all 8 graphs on 3 nodes: overlap +1 empty, -1 complete, 0 malformed (1e-10)";
  return res;
}

SuiteResult suite_normalization(const SuiteOptions&) {
  SuiteResult res{"normalization"};
  for (int k : {3, 7, 11}) {
    std::uint64_t total = 0;
    for (int j = 0; j <= k; ++j) {
      if (j % 4 == 2 || j % 4 == 3) total += binomial(k, j);
    }
    require(total == (1ULL << (k - 1)),
            "weight-class count at k=" + std::to_string(k) + " is not 2^(k-1)");
  }
  res.passed = true;
  res.detail = "sum of C(k,j) over j = 2,3 (mod 4) equals 2^(k-1) for k in {3,7,11}, exact";
  return res;
}

// Independent expected state for the input preparator on an idx basis
// state: enumerate the subsets of the selected nodes with weight 2 or 3
// mod 4 and pair them with the matching counter values.
Statevector expected_preparator_state(int n, std::uint64_t idx_value) {
  const int width = 2 * n + 2;
  std::vector<int> selected;
  for (int j = 0; j < n; ++j) {
    if ((idx_value >> j) & 1ULL) selected.push_back(j);
  }
  const int k = static_cast<int>(selected.size());
  Statevector s = basis_state(width, idx_value);
  if (k % 4 != 3) return s;  // only the contracted case is constructed here
  s.amplitudes()[idx_value] = 0;
  const double amp = std::pow(2.0, -0.5 * k);
  for (std::uint64_t pick = 0; pick < (1ULL << k); ++pick) {
    std::uint64_t inp_bits = 0;
    for (int i = 0; i < k; ++i) {
      if ((pick >> i) & 1ULL) inp_bits |= 1ULL << (n + selected[static_cast<size_t>(i)]);
    }
    int hw = popcount64(pick) % 4;
    std::vector<int> rems;
    if (hw == 2) rems = {1, 2};       // counter reads 01 or 10
    else if (hw == 3) rems = {0, 3};  // counter reads 00 or 11
    else continue;
    for (int r : rems) {
      std::uint64_t index = idx_value | inp_bits | (static_cast<std::uint64_t>(r) << (2 * n));
      s.amplitudes()[index] = amp;
    }
  }
  return s;
}

SuiteResult suite_input_preparator(const SuiteOptions&) {
  SuiteResult res{"input-preparator"};
  int states = 0;
  double worst = 0;
  for (int n = 1; n <= 7; ++n) {
    Circuit ip = build_input_preparator(n);
    require(!validate(ip), "input preparator fails validation at n=" + std::to_string(n));
    require(ip.layer_count() == 3 * n + 1,
            "input preparator layer count is not 3n+1 at n=" + std::to_string(n));
    // the complementing stage serializes on the counter's high bit
    int rem1 = 2 * n + 1;
    for (int li = ip.layer_count() - n; li < ip.layer_count(); ++li) {
      bool touches = false;
      for (const Gate& g : ip.layers()[static_cast<size_t>(li)]) {
        for (int q : g.qubits()) touches |= q == rem1;
      }
      require(touches, "complement stage layer does not touch the counter high bit");
    }

    Statevector zero_in = run(ip, basis_state(2 * n + 2, 0));
    require(max_abs_difference(zero_in, basis_state(2 * n + 2, 0)) <= 1e-12,
            "idx=0 must leave the state untouched");

    for (std::uint64_t idx = 1; idx < (1ULL << n); ++idx) {
      if (popcount64(idx) % 4 != 3) continue;
      Statevector got = run(ip, basis_state(2 * n + 2, idx));
      Statevector want = expected_preparator_state(n, idx);
      double err = max_abs_difference(got, want);
      worst = std::max(worst, err);
      require(err <= 1e-10, "preparator output differs from expected state at n=" +
                                std::to_string(n) + ", idx=" + std::to_string(idx));
      ++states;
    }
  }
  res.passed = true;
  res.detail = std::to_string(states) +
               " weight-3(mod 4) inputs over n<=7 match the combinatorial expectation; worst "
               "deviation " +
               fmt(worst, 3);
  return res;
}

SuiteResult suite_gamma(const SuiteOptions&) {
  SuiteResult res{"gamma"};
  struct Case {
    int n;
    int k;
    int queries;
  };
  const std::vector<Case> cases = {{4, 2, 3}, {5, 3, 3}, {6, 3, 2}, {6, 4, 2}, {6, 5, 2}, {6, 6, 1}};
  int complete_checked = 0;
  for (const Case& c : cases) {
    Graph g = Graph::complete(c.n);
    AugmentedGraph ag = augment_apex(g, c.k);
    const int nq = ag.total();
    Circuit gamma = build_gamma(ag);
    require(!validate(gamma), "gamma fails validation");
    require(gamma.qubit_count() == 2 * nq + 2, "gamma register count is not 2(n+q)+2");
    require(gamma.register_named("idx").size == nq && gamma.register_named("inp").size == nq &&
                gamma.register_named("rem").size == 2,
            "gamma register map wrong");

    auto cliques = list_k_cliques(g, c.k);
    for (int i = 0; i < c.queries && i < static_cast<int>(cliques.size()); ++i) {
      std::vector<int> h = cliques[static_cast<size_t>(i)];
      for (int apex = ag.original_n; apex < nq; ++apex) h.push_back(apex);
      Statevector in = basis_state(gamma.qubit_count(), SubgraphQuery{h}.idx_value());
      Statevector out = run(gamma, in);
      require(max_abs_sum(out, in) <= 1e-10,
              "complete query did not acquire an exact -1 (n=" + std::to_string(c.n) +
                  ", k=" + std::to_string(c.k) + ")");
      ++complete_checked;
    }
  }

  // a non-complete graph: the surviving triangle is marked exactly, the
  // broken one is reported
  double reported_residual = 0;
  double reported_diagonal = 0;
  {
    const Graph k6 = Graph::complete(6);
    std::vector<Edge> edges;
    for (const Edge& e : k6.edges()) {
      if (!(e.a == 0 && e.b == 2)) edges.push_back(e);
    }
    Graph g(6, edges);
    AugmentedGraph ag = augment_apex(g, 3);
    Circuit gamma = build_gamma(ag);
    const int nq = ag.total();
    std::vector<int> good = {1, 3, 5};
    std::vector<int> bad = {0, 2, 4};
    for (int apex = ag.original_n; apex < nq; ++apex) {
      good.push_back(apex);
      bad.push_back(apex);
    }
    Statevector in_good = basis_state(gamma.qubit_count(), SubgraphQuery{good}.idx_value());
    require(max_abs_sum(run(gamma, in_good), in_good) <= 1e-10,
            "intact triangle query must flip phase exactly");
    ++complete_checked;

    Statevector in_bad = basis_state(gamma.qubit_count(), SubgraphQuery{bad}.idx_value());
    Statevector out_bad = run(gamma, in_bad);
    Register work{"work", nq, nq + 2};
    reported_residual = residual_mass(out_bad, work, 0);
    reported_diagonal = inner_product(in_bad, out_bad).real();
  }

  // pre-augmentation behavior on 3 nodes: edgeless flips, malformed is
  // exactly untouched
  {
    Circuit gamma_empty = build_gamma(Graph(3, {}));
    Statevector in = basis_state(gamma_empty.qubit_count(), 0b111);
    require(max_abs_sum(run(gamma_empty, in), in) <= 1e-10,
            "edgeless 3-node query must flip phase exactly");

    Circuit gamma_path = build_gamma(Graph(3, {{0, 1}, {1, 2}}));
    Statevector in_path = basis_state(gamma_path.qubit_count(), 0b111);
    Statevector out_path = run(gamma_path, in_path);
    require(max_abs_difference(out_path, in_path) <= 1e-10,
            "malformed 3-node query must pass through exactly (3-node orthogonality)");
  }

  res.passed = true;
  res.detail = std::to_string(complete_checked) +
               " complete queries flip exactly with clean ancillas; width = 2(n+q)+2 throughout; "
               "malformed 7-node query: diagonal " +
               fmt(reported_diagonal, 4) + ", leaked work mass " + fmt(reported_residual, 4);
  return res;
}

SuiteResult suite_qubit_counts(const SuiteOptions&) {
  SuiteResult res{"qubit-counts"};
  struct Row {
    int n, k, qubits;
  };
  const std::vector<Row> rows = {{6, 3, 22}, {6, 4, 20}, {7, 3, 24}, {7, 4, 22}, {7, 5, 20},
                                 {8, 3, 26}, {8, 4, 24}, {8, 5, 22}, {8, 6, 20}};
  for (const Row& r : rows) {
    int q = apex_count_for(r.k);
    require((r.k + q) % 4 == 3 && q >= 1, "apex count violates k+q = 3 (mod 4)");
    require(2 * (r.n + q) + 2 == r.qubits,
            "qubit formula misses (n=" + std::to_string(r.n) + ", k=" + std::to_string(r.k) + ")");
    SearchSpaceSpec spec = make_search_space_spec(r.n, r.k);
    require(2 * spec.n_qubits() + 2 == r.qubits, "search space spec disagrees");
  }
  res.passed = true;
  res.detail = "all nine (n,k) qubit counts reproduced by 2(n+q)+2";
  return res;
}

SuiteResult suite_dicke(const SuiteOptions&) {
  SuiteResult res{"dicke"};
  int states = 0;
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      Circuit prep = build_dicke_prep(n, k);
      require(!validate(prep), "dicke prep fails validation");
      Statevector s = run(prep, zero_state(n));
      const double want = 1.0 / std::sqrt(static_cast<double>(binomial(n, k)));
      for (std::uint64_t i = 0; i < s.dimension(); ++i) {
        std::complex<double> a = s.amplitude(i);
        if (popcount64(i) == k) {
          require(std::abs(a.real() - want) <= 1e-10 && std::abs(a.imag()) <= 1e-12,
                  "dicke amplitude not uniform real positive at n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
        } else {
          require(std::abs(a) <= 1e-12, "dicke support leaks outside weight-k strings");
        }
      }
      require(std::abs(s.norm_sq() - 1.0) <= 1e-10, "dicke norm drifted");
      ++states;
    }
  }

  // apex qubits ride along as fixed ones
  {
    SearchSpaceSpec spec = make_search_space_spec(6, 3);
    Statevector s = run(build_search_prep(spec), zero_state(spec.n_qubits()));
    int support = 0;
    for (std::uint64_t i = 0; i < s.dimension(); ++i) {
      if (std::abs(s.amplitude(i)) < 1e-12) continue;
      ++support;
      require(popcount64(i) == spec.k + spec.q, "search state has wrong weight");
      require((i >> spec.n) == (1ULL << spec.q) - 1ULL, "apex bits not all set");
    }
    require(support == static_cast<int>(binomial(6, 3)), "search space size != C(n,k)");
  }

  // reflection about the prepared state, checked as a full matrix
  {
    const int n = 5;
    Circuit prep = build_dicke_prep(n, 2);
    Circuit s0 = build_s0(n, prep.register_named("idx"), prep.registers());
    Circuit refl = compose(compose(adjoint(prep), s0), prep);
    Statevector psi = run(prep, zero_state(n));
    for (std::uint64_t col = 0; col < (1ULL << n); ++col) {
      Statevector got = run(refl, basis_state(n, col));
      for (std::uint64_t row = 0; row < (1ULL << n); ++row) {
        std::complex<double> want = (row == col ? 1.0 : 0.0);
        want -= 2.0 * psi.amplitude(row) * std::conj(psi.amplitude(col));
        require(std::abs(got.amplitude(row) - want) <= 1e-10,
                "prep..S0..prep^dagger is not the reflection about the prepared state");
      }
    }
  }

  res.passed = true;
  res.detail = std::to_string(states) + " (n,k) Dicke states exact; search prep and zero "
               "reflection verified";
  return res;
}

SuiteResult suite_grover(const SuiteOptions& o) {
  SuiteResult res{"grover"};
  struct Instance {
    Graph g;
    int k;
  };
  std::vector<Instance> instances;
  {
    const Graph k4 = Graph::complete(4);
    std::vector<Edge> k4_minus;
    for (const Edge& e : k4.edges()) {
      if (!(e.a == 0 && e.b == 1)) k4_minus.push_back(e);
    }
    instances.push_back({Graph(4, k4_minus), 2});
  }
  instances.push_back({Graph::complete(5), 3});
  instances.push_back({Graph(6, {{0, 1}, {0, 2}, {1, 2}}), 3});  // single triangle, N=20
  instances.push_back({Graph::complete(7), 4});
  for (int i = 0; i < 4; ++i) {
    instances.push_back({generate_synthetic(6, 0.55, mix_seed(o.seed, 4000 + static_cast<std::uint64_t>(i))), 3});
    instances.push_back({generate_synthetic(7, 0.55, mix_seed(o.seed, 4100 + static_cast<std::uint64_t>(i))), 3});
  }

  const long long shots = 10000;
  int tested = 0;
  std::ostringstream detail;
  for (size_t idx = 0; idx < instances.size(); ++idx) {
    const Graph& g = instances[idx].g;
    const int k = instances[idx].k;
    const std::uint64_t search_space = binomial(g.node_count(), k);
    const auto solutions = static_cast<std::uint64_t>(list_k_cliques(g, k).size());
    if (solutions == 0) continue;

    AugmentedGraph ag = augment_apex(g, k);
    SearchSpaceSpec spec = make_search_space_spec(g.node_count(), k);
    Circuit prep = build_search_prep(spec);
    Circuit oracle = build_exact_marking_oracle(ag, k);
    const int t = optimal_iterations(search_space, solutions);
    MeasurementHistogram hist =
        run_aa(prep, oracle, t, shots, mix_seed(o.seed, 4200 + static_cast<std::uint64_t>(idx)));

    long long hits = 0;
    for (const auto& [outcome, count] : hist.counts) {
      std::vector<int> support;
      for (int node = 0; node < g.node_count(); ++node) {
        if ((outcome >> node) & 1ULL) support.push_back(node);
      }
      bool apex_ok = (outcome >> g.node_count()) == (1ULL << spec.q) - 1ULL;
      if (apex_ok && static_cast<int>(support.size()) == k && nodes_form_clique(g, support)) {
        hits += count;
      }
    }
    const double theta =
        std::asin(std::sqrt(static_cast<double>(solutions) / static_cast<double>(search_space)));
    const double p = std::pow(std::sin((2.0 * t + 1.0) * theta), 2.0);
    const double freq = static_cast<double>(hits) / static_cast<double>(shots);
    const double sigma = std::sqrt(std::max(p * (1.0 - p), 1e-12) / static_cast<double>(shots));
    require(std::abs(freq - p) <= 3.0 * sigma + 1e-9,
            "amplified success frequency " + fmt(freq) + " deviates from closed form " + fmt(p) +
                " beyond 3 sigma (N=" + std::to_string(search_space) +
                ", M=" + std::to_string(solutions) + ", t=" + std::to_string(t) + ")");
    ++tested;
  }
  res.passed = true;
  res.detail = std::to_string(tested) +
               " instances match sin^2((2t+1) asin(sqrt(M/N))) within 3 sigma at 10^4 shots";
  return res;
}

SuiteResult suite_replication(const SuiteOptions& o) {
  SuiteResult res{"replication"};
  struct Cell {
    double density;
    int k;
  };
  const std::vector<Cell> cells = {{0.5, 3}, {0.5, 4}, {0.9, 3}, {0.9, 4}};
  std::ostringstream detail;
  bool all_ok = true;
  for (size_t ci = 0; ci < cells.size(); ++ci) {
    ExperimentConfig cfg;
    cfg.source = GraphSource::synthetic(cells[ci].density, 60);
    cfg.n = 6;
    cfg.k = cells[ci].k;
    cfg.instances = o.max_instances;
    cfg.stop_after_cliqueful = o.instances;
    cfg.shots = o.shots;
    cfg.top_window = o.top_window;
    cfg.seed = mix_seed(o.seed, 7000 + ci);
    cfg.oracle = OracleKind::Gamma;
    BenchResult br = run_benchmark(cfg);
    const CellAggregate& cell = br.report.cells.at(0);
    bool enough = cell.with_clique >= o.instances;
    bool rate_ok = cell.success_rate >= 0.80;
    all_ok = all_ok && enough && rate_ok;
    detail << (ci ? "; " : "") << "density " << cells[ci].density << " k=" << cfg.k << ": "
           << cell.successes << "/" << cell.with_clique << " ("
           << fmt(100.0 * cell.success_rate, 4) << "%), geomean ratio "
           << (cell.geomean_ratio ? fmt(*cell.geomean_ratio, 4) : std::string("n/a")) << ", "
           << cell.qubits << " qubits";
    if (!enough) detail << " [too few clique-containing instances]";
  }
  res.passed = all_ok;
  res.detail = detail.str();
  return res;
}

SuiteResult suite_exclusions(const SuiteOptions&) {
  SuiteResult res{"exclusions"};
  res.passed = true;
  res.detail = "asymptotic complexity claims and the 24-26 qubit table rows are covered only by "
               "the structural depth checks; no simulation is attempted for them";
  return res;
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"factorization", suite_factorization},
      {"partition", suite_partition},
      {"cliques", suite_cliques},
      {"edge-detectors", suite_edge_detectors},
      {"depth", suite_depth},
      {"alpha-triangle", suite_alpha_triangle},
      {"normalization", suite_normalization},
      {"input-preparator", suite_input_preparator},
      {"gamma", suite_gamma},
      {"qubit-counts", suite_qubit_counts},
      {"dicke", suite_dicke},
      {"grover", suite_grover},
      {"replication", suite_replication},
      {"exclusions", suite_exclusions},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suite_table()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& [known, fn] : suite_table()) {
    if (known == name) {
      auto start = std::chrono::steady_clock::now();
      SuiteResult res;
      try {
        res = fn(options);
      } catch (const std::exception& e) {
        res.name = name;
        res.passed = false;
        res.detail = e.what();
      }
      res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return res;
    }
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace qclique
