#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dodagx/errors.hpp"
#include "dodagx/vertex_set.hpp"

namespace dodagx {

using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph over stable vertex ids [0, n).
///
/// Deleting a vertex deactivates it instead of reindexing, so party ids and
/// measurement logs stay meaningful across a protocol run. Adjacency rows are
/// bitsets; local complementation is |N_v| row XORs.
///
/// The mutating members are the building blocks of the protocol kernels,
/// which work on their own copy. The free functions below are the pure API.
class Graph {
 public:
  Graph() = default;
  /// n active vertices, no edges.
  explicit Graph(std::size_t n);

  /// Throws DomainError on self-loops or out-of-range endpoints. Duplicate
  /// pairs are collapsed.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return n_; }
  bool is_active(VertexId v) const { return v < n_ && active_.test(v); }
  const VertexSet& active() const { return active_; }
  std::size_t active_count() const { return active_.count(); }

  bool adjacent(VertexId u, VertexId v) const { return rows_[u].test(v); }
  /// Raw adjacency row. Caller guarantees v < order().
  const VertexSet& row(VertexId v) const { return rows_[v]; }
  std::size_t degree(VertexId v) const { return rows_[v].count(); }
  std::size_t edge_count() const;
  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  void toggle_edge(VertexId u, VertexId v);

  /// In-place vertex deletion (Z measurement). Throws DomainError if inactive.
  void remove_vertex(VertexId v);
  /// In-place local complementation at v. Throws DomainError if inactive.
  void complement_at(VertexId v);

  /// Throws DomainError unless v is an active vertex.
  void require_active(VertexId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  VertexSet active_;
  std::vector<VertexSet> rows_;
};

/// Vertex sequence; index 0 is the source, back() the destination.
struct OrderedPath {
  std::vector<VertexId> vertices;

  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  /// Vertices strictly between the endpoints.
  std::vector<VertexId> interior() const;
  friend bool operator==(const OrderedPath&, const OrderedPath&) = default;
};

/// True when the vertices are distinct, active, and consecutive pairs are edges.
bool is_valid_path(const Graph& g, const OrderedPath& path);

VertexSet neighborhood(const Graph& g, VertexId v);
Graph delete_vertex(const Graph& g, VertexId v);
Graph local_complement(const Graph& g, VertexId v);

/// BFS shortest path from a to b. Among equal-length paths, each vertex's
/// predecessor is the lowest-id neighbor one level closer to a. Vertices in
/// `blocked` (if given) are never used as interior vertices.
/// Throws NoPathError if b is unreachable.
OrderedPath shortest_path(const Graph& g, VertexId a, VertexId b,
                          const VertexSet* blocked = nullptr);

/// Hop distances from v over active vertices; unreachable entries are -1.
std::vector<int> bfs_distances(const Graph& g, VertexId v);

/// Throws DomainError if g is not connected.
int eccentricity(const Graph& g, VertexId v);

bool is_connected(const Graph& g);
/// Connectivity of the subgraph induced by `members` (empty set counts as connected).
bool is_connected_within(const Graph& g, const VertexSet& members);
bool is_tree(const Graph& g);

}  // namespace dodagx
