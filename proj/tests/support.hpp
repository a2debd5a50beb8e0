#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "dodagx/graph.hpp"
#include "dodagx/rng.hpp"
#include "dodagx/topology.hpp"

// Independent reference code for the tests: plain adjacency matrices and
// brute-force searches, sharing nothing with the bitset implementation.
namespace testing {

using dodagx::Edge;
using dodagx::Graph;
using dodagx::VertexId;

using Matrix = std::vector<std::vector<bool>>;

inline std::set<Edge> edge_set(const Graph& g) {
  const auto e = g.edges();
  return {e.begin(), e.end()};
}

inline std::set<Edge> edges_of(std::initializer_list<Edge> list) {
  std::set<Edge> out;
  for (auto [u, v] : list) out.insert(u < v ? Edge{u, v} : Edge{v, u});
  return out;
}

inline Matrix to_matrix(const Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

inline std::set<Edge> matrix_edges(const Matrix& m) {
  std::set<Edge> out;
  for (VertexId u = 0; u < m.size(); ++u)
    for (VertexId v = u + 1; v < m.size(); ++v)
      if (m[u][v]) out.insert({u, v});
  return out;
}

/// Local complementation on a matrix: toggle every pair inside N(v).
inline Matrix matrix_local_complement(Matrix m, VertexId v) {
  std::vector<VertexId> nb;
  for (VertexId u = 0; u < m.size(); ++u)
    if (m[v][u]) nb.push_back(u);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      const bool e = !m[nb[i]][nb[j]];
      m[nb[i]][nb[j]] = m[nb[j]][nb[i]] = e;
    }
  return m;
}

inline Matrix matrix_delete(Matrix m, VertexId v) {
  for (VertexId u = 0; u < m.size(); ++u) m[u][v] = m[v][u] = false;
  return m;
}

/// Length (vertex count) of the shortest simple path by exhaustive DFS; 0 if none.
inline std::size_t brute_shortest_path(const Graph& g, VertexId a, VertexId b) {
  std::size_t best = 0;
  std::vector<bool> used(g.order(), false);
  std::function<void(VertexId, std::size_t)> dfs = [&](VertexId v, std::size_t len) {
    if (v == b) {
      if (best == 0 || len < best) best = len;
      return;
    }
    used[v] = true;
    for (VertexId u = 0; u < g.order(); ++u)
      if (g.adjacent(v, u) && !used[u]) dfs(u, len + 1);
    used[v] = false;
  };
  dfs(a, 1);
  return best;
}

inline Graph random_graph(std::size_t n, double q, std::uint64_t seed) {
  dodagx::Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.uniform() < q) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  return dodagx::topology::generate(dodagx::topology::RandomTree{n, seed});
}

}  // namespace testing
