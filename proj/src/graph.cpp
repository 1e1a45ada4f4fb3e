#include "qclique/graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace qclique {

Edge make_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("self-loop: " + std::to_string(a));
  if (a > b) std::swap(a, b);
  return Edge{a, b};
}

Graph::Graph(int node_count, std::vector<Edge> edges) : node_count_(node_count) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  for (auto& e : edges) {
    e = make_edge(e.a, e.b);
    if (e.a < 0 || e.b >= node_count) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.a) + "-" +
                                  std::to_string(e.b));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.push_back(Edge{a, b});
  }
  return Graph(n, std::move(edges));
}

bool Graph::has_edge(int a, int b) const {
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

EdgePartition one_factorization(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("1-factorization needs even n >= 2, got " + std::to_string(n));
  }
  EdgePartition p;
  p.classes.reserve(static_cast<size_t>(n - 1));
  const int mod = n - 1;
  for (int i = 0; i < n - 1; ++i) {
    OneFactor f;
    f.reserve(static_cast<size_t>(n / 2));
    f.push_back(make_edge(n - 1, i));
    for (int j = 1; j <= n / 2 - 1; ++j) {
      int u = ((i - j) % mod + mod) % mod;
      int v = (i + j) % mod;
      f.push_back(make_edge(u, v));
    }
    p.classes.push_back(std::move(f));
  }
  return p;
}

EdgePartition partition_edges(const Graph& g) {
  EdgePartition out;
  if (g.edge_count() == 0) return out;
  int np = g.node_count() + (g.node_count() % 2);
  for (auto& factor : one_factorization(np).classes) {
    OneFactor kept;
    for (const Edge& e : factor) {
      if (g.has_edge(e.a, e.b)) kept.push_back(e);
    }
    if (!kept.empty()) out.classes.push_back(std::move(kept));
  }
  return out;
}

namespace {

void extend_cliques(const Graph& g, int k, std::vector<int>& current, int next,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  int remaining = k - static_cast<int>(current.size());
  for (int v = next; v + remaining <= g.node_count(); ++v) {
    bool adjacent_to_all = true;
    for (int u : current) {
      if (!g.has_edge(u, v)) {
        adjacent_to_all = false;
        break;
      }
    }
    if (adjacent_to_all) {
      current.push_back(v);
      extend_cliques(g, k, current, v + 1, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<int>> list_k_cliques(const Graph& g, int k) {
  if (k < 1 || k > g.node_count()) {
    throw std::invalid_argument("clique size " + std::to_string(k) + " out of range for " +
                                std::to_string(g.node_count()) + " nodes");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  extend_cliques(g, k, current, 0, out);
  return out;
}

InducedSubgraph random_induced_subgraph(const Graph& g, int n, std::uint64_t seed) {
  if (n < 0 || n > g.node_count()) {
    throw std::invalid_argument("induced subgraph size " + std::to_string(n) +
                                " exceeds node count " + std::to_string(g.node_count()));
  }
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates over node ids, then sort the chosen prefix so that
  // relabeling preserves the original order.
  std::vector<int> ids(static_cast<size_t>(g.node_count()));
  for (int i = 0; i < g.node_count(); ++i) ids[static_cast<size_t>(i)] = i;
  for (int i = 0; i < n; ++i) {
    auto span = static_cast<std::uint64_t>(g.node_count() - i);
    auto j = static_cast<int>(rng() % span) + i;
    std::swap(ids[static_cast<size_t>(i)], ids[static_cast<size_t>(j)]);
  }
  std::vector<int> chosen(ids.begin(), ids.begin() + n);
  std::sort(chosen.begin(), chosen.end());

  std::vector<int> new_id(static_cast<size_t>(g.node_count()), -1);
  for (int i = 0; i < n; ++i) new_id[static_cast<size_t>(chosen[static_cast<size_t>(i)])] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = new_id[static_cast<size_t>(e.a)];
    int b = new_id[static_cast<size_t>(e.b)];
    if (a >= 0 && b >= 0) edges.push_back(make_edge(a, b));
  }
  return InducedSubgraph{Graph(n, std::move(edges)), std::move(chosen)};
}

int apex_count_for(int k) {
  int q = ((3 - k) % 4 + 4) % 4;
  return q == 0 ? 4 : q;
}

AugmentedGraph augment_apex(const Graph& g, int k) {
  if (k < 1 || k > g.node_count()) {
    throw std::invalid_argument("clique size " + std::to_string(k) + " out of range for " +
                                std::to_string(g.node_count()) + " nodes");
  }
  int q = apex_count_for(k);
  int total = g.node_count() + q;
  std::vector<Edge> edges = g.edges();
  for (int apex = g.node_count(); apex < total; ++apex) {
    for (int other = 0; other < apex; ++other) edges.push_back(make_edge(other, apex));
  }
  return AugmentedGraph{Graph(total, std::move(edges)), q, g.node_count()};
}

}  // namespace qclique
