#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dodagx/dodag.hpp"
#include "dodagx/graph.hpp"
#include "dodagx/measurement.hpp"

namespace dodagx {

/// Distinct, active vertices to be entangled, in caller order.
struct PartySet {
  std::vector<VertexId> parties;

  std::size_t size() const { return parties.size(); }
  bool contains(VertexId v) const;
  VertexSet as_set(std::size_t capacity) const;
};

/// Intersection node a_{i,j} for every unordered party pair, keyed (min, max).
class IntersectionMap {
 public:
  void set(VertexId i, VertexId j, VertexId node);
  /// Symmetric lookup; throws DomainError for unknown pairs.
  VertexId at(VertexId i, VertexId j) const;
  const std::map<std::pair<VertexId, VertexId>, VertexId>& pairs() const { return nodes_; }
  /// Distinct intersection nodes, ascending id.
  std::vector<VertexId> nodes() const;

 private:
  std::map<std::pair<VertexId, VertexId>, VertexId> nodes_;
};

struct RoutingCounts {
  std::size_t path_x = 0;       ///< X measurements along routing paths
  std::size_t root_x = 0;       ///< the final X on a non-party root
  std::size_t isolation_z = 0;  ///< Z measurements removing non-party neighbors

  std::size_t x_count() const { return path_x + root_x; }
  std::size_t z_count() const { return isolation_z; }
  std::size_t total() const { return path_x + root_x + isolation_z; }
  friend bool operator==(const RoutingCounts&, const RoutingCounts&) = default;
};

struct RoutingOutcome {
  Graph final_graph;
  PartySet parties;
  MeasurementLog log;
  RoutingCounts counts;
  bool success = false;
  std::string note;  ///< reason when success is false
};

/// A routing run that could not complete; carries the measurements applied so far.
class RoutingFailedError : public std::runtime_error {
 public:
  RoutingFailedError(const std::string& what, MeasurementLog partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const MeasurementLog& partial_log() const { return partial_; }

 private:
  MeasurementLog partial_;
};

/// Parties induce a connected subgraph and no party has a non-party neighbor.
bool is_isolated_entangled(const Graph& g, const PartySet& parties);

/// Pairwise lowest common ancestors (first shared vertex of the root paths).
IntersectionMap intersections(const DodagTree& t, const PartySet& parties);

/// Snapshots taken while running DODAG-X, for property checks.
struct DodagXTrace {
  VertexId root = 0;  ///< root after re-rooting at the deepest vertex shared by all parties
  IntersectionMap intersections;
  std::map<VertexId, VertexId> nearest;  ///< party -> intersection it was entangled with
  Graph after_step4;
  Graph after_step6;
};

/// DODAG-X for two or three parties on the tree's entanglement graph.
/// g_tree must be t.tree_graph (or an identical copy).
RoutingOutcome dodag_x(const Graph& g_tree, const DodagTree& t, const PartySet& parties,
                       DodagXTrace* trace = nullptr);

/// DODAG-X applied to any number (>= 2) of parties. Success is measured on
/// the final graph; a failed run is reported through `success`, not thrown.
RoutingOutcome dodag_x_nparty(const Graph& g_tree, const DodagTree& t, const PartySet& parties,
                              DodagXTrace* trace = nullptr);

/// Two-party X-protocol on an arbitrary graph.
RoutingOutcome x_protocol_pair(const Graph& g, VertexId a, VertexId b);

/// Three-party X-protocol: entangle a with b along a shortest path, then c
/// with whichever of a, b is closer in the evolved graph, then isolate.
/// Throws RoutingFailedError if a stage finds no path.
RoutingOutcome x_protocol_triplet(const Graph& g, VertexId a, VertexId b, VertexId c);

/// Repeater baseline: Z-isolate the shortest a-b path, then X-measure it.
RoutingOutcome repeater_protocol(const Graph& g, VertexId a, VertexId b);

}  // namespace dodagx
