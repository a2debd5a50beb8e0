#pragma once

#include <limits>
#include <vector>

#include "dodagx/graph.hpp"

namespace dodagx {

/// Rooted BFS spanning tree over the active vertices of a physical network.
/// parent[root] == root; inactive vertices have parent kNoParent.
struct DodagTree {
  static constexpr VertexId kNoParent = std::numeric_limits<VertexId>::max();

  VertexId root = 0;
  std::vector<VertexId> parent;
  std::vector<int> depth;
  Graph tree_graph;

  bool contains(VertexId v) const { return v < parent.size() && parent[v] != kNoParent; }
  /// Maximum depth over all vertices.
  int height() const;
};

/// Vertex of minimum eccentricity, lowest id on ties. Throws DomainError if
/// g is disconnected or empty.
VertexId select_root(const Graph& g);

/// Level-by-level BFS from root. A vertex's parent is its lowest-id neighbor
/// on the previous level. Throws DomainError if g is disconnected.
DodagTree build_dodag(const Graph& g, VertexId root);

/// select_root followed by build_dodag.
DodagTree build_dodag(const Graph& g);

/// (v, parent(v), ..., root). Throws DomainError for vertices not in the tree.
OrderedPath path_to_root(const DodagTree& t, VertexId v);

/// Prefix of path_to_root(t, v) ending at `ancestor`, which must lie on it.
OrderedPath path_to_ancestor(const DodagTree& t, VertexId v, VertexId ancestor);

/// Deepest vertex common to both root paths.
VertexId lowest_common_ancestor(const DodagTree& t, VertexId u, VertexId v);

}  // namespace dodagx
