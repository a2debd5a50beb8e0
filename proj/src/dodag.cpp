#include "dodagx/dodag.hpp"

#include <algorithm>
#include <string>

namespace dodagx {

int DodagTree::height() const {
  int h = 0;
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (parent[v] != kNoParent) h = std::max(h, depth[v]);
  return h;
}

VertexId select_root(const Graph& g) {
  if (g.active_count() == 0) throw DomainError("cannot select a root in an empty graph");
  VertexId best = 0;
  int best_ecc = std::numeric_limits<int>::max();
  g.active().for_each([&](VertexId v) {
    const int e = eccentricity(g, v);
    if (e < best_ecc) {
      best_ecc = e;
      best = v;
    }
  });
  return best;
}

DodagTree build_dodag(const Graph& g, VertexId root) {
  g.require_active(root);
  const std::size_t n = g.order();
  DodagTree t;
  t.root = root;
  t.parent.assign(n, DodagTree::kNoParent);
  t.depth.assign(n, -1);
  t.tree_graph = Graph(n);
  for (VertexId v = 0; v < n; ++v)
    if (!g.is_active(v)) t.tree_graph.remove_vertex(v);

  VertexSet visited(n);
  VertexSet level(n);
  level.set(root);
  visited.set(root);
  t.parent[root] = root;
  t.depth[root] = 0;
  int d = 0;
  while (!level.empty()) {
    VertexSet next(n);
    level.for_each([&](VertexId u) { next |= g.row(u); });
    next -= visited;
    ++d;
    next.for_each([&](VertexId v) {
      const VertexId p = (g.row(v) & level).first();
      t.parent[v] = p;
      t.depth[v] = d;
      t.tree_graph.add_edge(p, v);
    });
    visited |= next;
    level = std::move(next);
  }
  if (visited != g.active()) throw DomainError("DODAG construction requires a connected graph");
  return t;
}

DodagTree build_dodag(const Graph& g) { return build_dodag(g, select_root(g)); }

OrderedPath path_to_root(const DodagTree& t, VertexId v) {
  if (!t.contains(v)) throw DomainError("vertex " + std::to_string(v) + " is not in the tree");
  OrderedPath path;
  path.vertices.reserve(static_cast<std::size_t>(t.depth[v]) + 1);
  path.vertices.push_back(v);
  while (v != t.root) {
    v = t.parent[v];
    path.vertices.push_back(v);
  }
  return path;
}

OrderedPath path_to_ancestor(const DodagTree& t, VertexId v, VertexId ancestor) {
  OrderedPath path = path_to_root(t, v);
  const auto it = std::find(path.vertices.begin(), path.vertices.end(), ancestor);
  if (it == path.vertices.end())
    throw DomainError("vertex " + std::to_string(ancestor) + " is not an ancestor of " + std::to_string(v));
  path.vertices.erase(it + 1, path.vertices.end());
  return path;
}

VertexId lowest_common_ancestor(const DodagTree& t, VertexId u, VertexId v) {
  if (!t.contains(u) || !t.contains(v)) throw DomainError("vertex is not in the tree");
  while (t.depth[u] > t.depth[v]) u = t.parent[u];
  while (t.depth[v] > t.depth[u]) v = t.parent[v];
  while (u != v) {
    u = t.parent[u];
    v = t.parent[v];
  }
  return u;
}

}  // namespace dodagx
