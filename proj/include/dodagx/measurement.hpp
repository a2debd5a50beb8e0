#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dodagx/graph.hpp"

namespace dodagx {

enum class PauliBasis { X, Z };

/// Z[target] or X[target, witness].
struct Measurement {
  PauliBasis kind = PauliBasis::Z;
  VertexId target = 0;
  std::optional<VertexId> witness;

  static Measurement z(VertexId target) { return {PauliBasis::Z, target, std::nullopt}; }
  static Measurement x(VertexId target, VertexId witness) { return {PauliBasis::X, target, witness}; }
  friend bool operator==(const Measurement&, const Measurement&) = default;
};

/// Ordered record of applied measurements with per-basis tallies.
class MeasurementLog {
 public:
  void append(const Measurement& m);
  const std::vector<Measurement>& entries() const { return entries_; }
  std::size_t x_count() const { return x_count_; }
  std::size_t z_count() const { return z_count_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<Measurement> entries_;
  std::size_t x_count_ = 0;
  std::size_t z_count_ = 0;
};

/// In-place Z rule: the vertex is deleted.
void apply_z(Graph& g, VertexId v);

/// In-place X rule tau_w Z_v tau_v tau_w, applied right to left.
/// Throws WitnessNotNeighborError if w is not adjacent to v.
void apply_x(Graph& g, VertexId v, VertexId w);

/// Applies m in place.
void apply(Graph& g, const Measurement& m);

std::pair<Graph, Measurement> measure_z(const Graph& g, VertexId v);
std::pair<Graph, Measurement> measure_x(const Graph& g, VertexId v, VertexId w);

/// Intermediate graphs of the X rule: after tau_w, tau_v, Z_v, tau_w.
std::vector<Graph> measure_x_trace(const Graph& g, VertexId v, VertexId w);

/// Closed-form neighborhoods of the two path endpoints after X-measuring the
/// interior v_2..v_{m-1} in order with witness v_1, evaluated from the
/// initial neighborhoods as alternating symmetric-difference chains.
/// Requires a tree and a valid path with at least three vertices.
struct EndpointNeighborhoods {
  VertexSet first;  ///< predicted N(v_1)
  VertexSet last;   ///< predicted N(v_m)
};
EndpointNeighborhoods predict_endpoint_neighborhoods(const Graph& g, const OrderedPath& path);

}  // namespace dodagx
