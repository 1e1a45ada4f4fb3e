#pragma once

#include <cstdint>
#include <vector>

#include "qclique/circuit.hpp"
#include "qclique/graph.hpp"

namespace qclique {

// Edge query: a basis state on idx with 1s exactly at the two endpoints.
struct EdgeQuery {
  int a;
  int b;
  std::uint64_t idx_value() const { return (1ULL << a) | (1ULL << b); }
};

// Subgraph query: characteristic bitstring of a node set on idx.
struct SubgraphQuery {
  std::vector<int> nodes;
  std::uint64_t idx_value() const {
    std::uint64_t v = 0;
    for (int node : nodes) v |= 1ULL << node;
    return v;
  }
};

// Edge detector, serial form: registers idx (n) and out (1); one CCX per
// edge, each in its own layer since all of them share out. For an edge
// query, out flips iff the edge exists. Layer count equals the edge count.
Circuit build_edge_detector_naive(const Graph& g);

// Edge detector, layered form: registers idx (n), anc (floor(n/2)), out (1).
// Each matching class of partition_edges contributes one layer of CCX gates
// onto distinct anc qubits (class edges sorted by smaller endpoint take
// anc_0, anc_1, ...). out is then flipped when at least one anc qubit is 1
// (multi-controlled X with inverted controls, followed by X), and the CCX
// half runs again in reverse to reset anc. Weighted depth is linear in n.
Circuit build_edge_detector(const Graph& g);

// Phase oracle over the node qubits: one CZ per edge, layered by
// partition_edges so the layer count never exceeds n. Self-adjoint.
// Register: inp (n).
Circuit build_alpha(const Graph& g);

// <psi_in| Alpha |psi_in> where psi_in is the input-preparator output for
// the subgraph H (the rem register realizes the paired ancilla states).
// Requires |H| = 3 (mod 4). The result is real: +1 when H induces no
// edges, -1 when H induces a complete subgraph, and near 0 otherwise
// (exactly 0 when |H| = 3).
double alpha_overlap(const Graph& g, const std::vector<int>& subgraph_nodes);

// Input preparator: registers idx (n), inp (n), rem (2, the higher qubit
// is the counter's most significant bit). For each node selected on idx,
// a controlled Hadamard opens a superposition on inp; a mod-4 counter on
// rem tallies the ones; components whose count is 0 or 1 mod 4 are
// complemented within the selected nodes so every surviving component has
// weight 2 or 3 mod 4. For |H| = 3 (mod 4) ones on idx, each component
// carries amplitude 2^{-(|H|+1)/2}, weight-2 components pair with rem
// values {01, 10} and weight-3 components with {00, 11}.
Circuit build_input_preparator(int n);

// Clique phase oracle: registers idx (n), inp (n), rem (2). Prepares the
// weight-filtered superposition, applies the CZ phase oracle, undoes the
// preparation, flips the phase of the all-zero inp+rem component, and
// repeats the first three steps to reset the ancillas. Queries whose node
// set induces a complete (or empty) subgraph acquire an exact -1 with
// ancillas restored; other queries are approximately untouched, with a
// residual that is measured rather than bounded.
Circuit build_gamma(const Graph& g);
Circuit build_gamma(const AugmentedGraph& ag);

// Idealized baseline: a single diagonal phase mark on idx covering exactly
// the basis states whose 1-positions form a (k+q)-clique containing every
// apex node. The marked set is computed classically; depth reporting flags
// the circuit as non-physical.
Circuit build_exact_marking_oracle(const AugmentedGraph& ag, int k);

}  // namespace qclique
