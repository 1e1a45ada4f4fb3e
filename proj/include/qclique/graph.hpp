#pragma once

#include <cstdint>
#include <vector>

namespace qclique {

// Undirected edge, normalized so that a < b.
struct Edge {
  int a;
  int b;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(int a, int b);

// Simple undirected graph: node indices 0..node_count-1, no self-loops,
// deduplicated edge set kept sorted. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  Graph(int node_count, std::vector<Edge> edges);

  static Graph complete(int n);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int a, int b) const;

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
};

// A matching: pairwise node-disjoint edges.
using OneFactor = std::vector<Edge>;

// Edge-disjoint matchings whose union is a graph's edge set.
struct EdgePartition {
  std::vector<OneFactor> classes;
};

// Original graph plus apex nodes adjacent to every other node. Apex nodes
// occupy the highest indices original_n .. total()-1.
struct AugmentedGraph {
  Graph graph;
  int apex_count = 0;
  int original_n = 0;

  int total() const { return graph.node_count(); }
  bool is_apex(int node) const { return node >= original_n; }
};

// Induced subgraph with nodes relabeled 0..n-1 preserving the original
// order; original_nodes[i] is the source id of new node i.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_nodes;
};

// The round-robin 1-factorization of the complete graph K_n (n even):
// n-1 perfect matchings S_0..S_{n-2}, where S_i pins edge {n-1, i} and
// rotates pairs {(i-j) mod (n-1), (i+j) mod (n-1)} for j = 1..n/2-1.
EdgePartition one_factorization(int n);

// Edge partition of an arbitrary graph: restrict the 1-factorization of
// K_{n'} (n' = node count rounded up to even) to the edges present and
// drop empty classes. Every class is a matching; there are <= n' - 1.
EdgePartition partition_edges(const Graph& g);

// All k-node fully connected induced subgraphs, in lexicographic order.
std::vector<std::vector<int>> list_k_cliques(const Graph& g, int k);

// Uniformly random n-node induced subgraph; deterministic given the seed.
InducedSubgraph random_induced_subgraph(const Graph& g, int n, std::uint64_t seed);

// Apex count q for clique size k: smallest q >= 1 with k + q = 3 (mod 4).
int apex_count_for(int k);

// Append q apex nodes, each adjacent to all other nodes of the result.
// A (k+q)-clique containing every apex node corresponds exactly to a
// k-clique of g.
AugmentedGraph augment_apex(const Graph& g, int k);

}  // namespace qclique
