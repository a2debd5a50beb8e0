#include "dodagx/graph.hpp"

#include <algorithm>
#include <string>

namespace dodagx {

Graph::Graph(std::size_t n) : n_(n), active_(VertexSet::full(n)), rows_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw DomainError("edge endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < n_; ++u)
    rows_[u].for_each([&](VertexId v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

void Graph::add_edge(VertexId u, VertexId v) {
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::remove_edge(VertexId u, VertexId v) {
  rows_[u].reset(v);
  rows_[v].reset(u);
}

void Graph::toggle_edge(VertexId u, VertexId v) {
  rows_[u].flip(v);
  rows_[v].flip(u);
}

void Graph::require_active(VertexId v) const {
  if (!is_active(v)) throw DomainError("vertex " + std::to_string(v) + " is not active");
}

void Graph::remove_vertex(VertexId v) {
  require_active(v);
  rows_[v].for_each([&](VertexId u) { rows_[u].reset(v); });
  rows_[v].clear();
  active_.reset(v);
}

void Graph::complement_at(VertexId v) {
  require_active(v);
  const VertexSet nbrs = rows_[v];
  nbrs.for_each([&](VertexId u) {
    rows_[u] ^= nbrs;
    rows_[u].reset(u);
  });
}

std::vector<VertexId> OrderedPath::interior() const {
  if (vertices.size() <= 2) return {};
  return {vertices.begin() + 1, vertices.end() - 1};
}

bool is_valid_path(const Graph& g, const OrderedPath& path) {
  if (path.empty()) return false;
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const VertexId v = path.vertices[i];
    if (!g.is_active(v) || seen.test(v)) return false;
    seen.set(v);
    if (i > 0 && !g.adjacent(path.vertices[i - 1], v)) return false;
  }
  return true;
}

VertexSet neighborhood(const Graph& g, VertexId v) {
  g.require_active(v);
  return g.row(v);
}

Graph delete_vertex(const Graph& g, VertexId v) {
  Graph out = g;
  out.remove_vertex(v);
  return out;
}

Graph local_complement(const Graph& g, VertexId v) {
  Graph out = g;
  out.complement_at(v);
  return out;
}

OrderedPath shortest_path(const Graph& g, VertexId a, VertexId b, const VertexSet* blocked) {
  g.require_active(a);
  g.require_active(b);
  if (a == b) return OrderedPath{{a}};

  VertexSet allowed = g.active();
  if (blocked != nullptr) allowed -= *blocked;
  allowed.set(a);
  allowed.set(b);

  std::vector<VertexSet> levels;
  VertexSet visited(g.order());
  VertexSet frontier(g.order());
  frontier.set(a);
  visited.set(a);
  while (!frontier.test(b)) {
    levels.push_back(frontier);
    VertexSet next(g.order());
    frontier.for_each([&](VertexId u) { next |= g.row(u); });
    next &= allowed;
    next -= visited;
    if (next.empty())
      throw NoPathError("no path from " + std::to_string(a) + " to " + std::to_string(b));
    visited |= next;
    frontier = std::move(next);
  }

  std::vector<VertexId> rev{b};
  VertexId cur = b;
  for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
    cur = (g.row(cur) & *level).first();
    rev.push_back(cur);
  }
  std::reverse(rev.begin(), rev.end());
  return OrderedPath{std::move(rev)};
}

std::vector<int> bfs_distances(const Graph& g, VertexId v) {
  g.require_active(v);
  std::vector<int> dist(g.order(), -1);
  VertexSet visited(g.order());
  VertexSet frontier(g.order());
  frontier.set(v);
  visited.set(v);
  int d = 0;
  while (!frontier.empty()) {
    VertexSet next(g.order());
    frontier.for_each([&](VertexId u) {
      dist[u] = d;
      next |= g.row(u);
    });
    next -= visited;
    visited |= next;
    frontier = std::move(next);
    ++d;
  }
  return dist;
}

int eccentricity(const Graph& g, VertexId v) {
  const auto dist = bfs_distances(g, v);
  int ecc = 0;
  bool disconnected = false;
  g.active().for_each([&](VertexId u) {
    if (dist[u] < 0) disconnected = true;
    ecc = std::max(ecc, dist[u]);
  });
  if (disconnected) throw DomainError("eccentricity undefined on a disconnected graph");
  return ecc;
}

bool is_connected_within(const Graph& g, const VertexSet& members) {
  if (members.empty()) return true;
  VertexSet visited(g.order());
  VertexSet frontier(g.order());
  frontier.set(members.first());
  visited |= frontier;
  while (!frontier.empty()) {
    VertexSet next(g.order());
    frontier.for_each([&](VertexId u) { next |= g.row(u); });
    next &= members;
    next -= visited;
    visited |= next;
    frontier = std::move(next);
  }
  return visited == members;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.active()); }

bool is_tree(const Graph& g) {
  const std::size_t n = g.active_count();
  return n > 0 && g.edge_count() == n - 1 && is_connected(g);
}

}  // namespace dodagx
