#include "dodagx/measurement.hpp"

#include <string>

namespace dodagx {

void MeasurementLog::append(const Measurement& m) {
  entries_.push_back(m);
  if (m.kind == PauliBasis::X)
    ++x_count_;
  else
    ++z_count_;
}

void apply_z(Graph& g, VertexId v) { g.remove_vertex(v); }

void apply_x(Graph& g, VertexId v, VertexId w) {
  g.require_active(v);
  if (!g.is_active(w) || !g.adjacent(v, w))
    throw WitnessNotNeighborError("X[" + std::to_string(v) + "," + std::to_string(w) +
                                  "]: witness is not a neighbor of the target");
  g.complement_at(w);
  g.complement_at(v);
  g.remove_vertex(v);
  g.complement_at(w);
}

void apply(Graph& g, const Measurement& m) {
  if (m.kind == PauliBasis::Z) {
    apply_z(g, m.target);
  } else {
    if (!m.witness) throw DomainError("X measurement without a witness");
    apply_x(g, m.target, *m.witness);
  }
}

std::pair<Graph, Measurement> measure_z(const Graph& g, VertexId v) {
  Graph out = g;
  apply_z(out, v);
  return {std::move(out), Measurement::z(v)};
}

std::pair<Graph, Measurement> measure_x(const Graph& g, VertexId v, VertexId w) {
  Graph out = g;
  apply_x(out, v, w);
  return {std::move(out), Measurement::x(v, w)};
}

std::vector<Graph> measure_x_trace(const Graph& g, VertexId v, VertexId w) {
  g.require_active(v);
  if (!g.is_active(w) || !g.adjacent(v, w))
    throw WitnessNotNeighborError("X[" + std::to_string(v) + "," + std::to_string(w) +
                                  "]: witness is not a neighbor of the target");
  std::vector<Graph> trace;
  trace.push_back(local_complement(g, w));
  trace.push_back(local_complement(trace.back(), v));
  trace.push_back(delete_vertex(trace.back(), v));
  trace.push_back(local_complement(trace.back(), w));
  return trace;
}

EndpointNeighborhoods predict_endpoint_neighborhoods(const Graph& g, const OrderedPath& path) {
  if (!is_tree(g)) throw DomainError("endpoint neighborhood closed forms require a tree");
  if (path.size() < 3) throw DomainError("path must contain at least three vertices");
  if (!is_valid_path(g, path)) throw DomainError("path is not valid in the graph");

  const std::size_t m = path.size();
  // 1-based position k maps to path.vertices[k - 1].
  auto nbr = [&](std::size_t k) -> const VertexSet& { return g.row(path.vertices[k - 1]); };
  auto chain = [&](std::size_t from, std::size_t to) {
    VertexSet acc(g.order());
    for (std::size_t k = from; k <= to; k += 2) acc ^= nbr(k);
    return acc;
  };

  const VertexId v1 = path.vertices.front();
  EndpointNeighborhoods out;
  if (m % 2 == 0) {
    out.first = chain(1, m - 1);
    out.last = chain(2, m);
  } else {
    out.first = chain(2, m - 1);
    out.first.reset(v1);
    out.last = chain(1, m);
    out.last.set(v1);
  }
  return out;
}

}  // namespace dodagx
