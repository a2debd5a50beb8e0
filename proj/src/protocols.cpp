#include "dodagx/protocols.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace dodagx {
namespace {

enum class Category { Path, Root, Isolation };

/// Mutable state of one protocol run.
class Run {
 public:
  Run(const Graph& g, PartySet parties) : graph_(g), parties_(std::move(parties)) {}

  Graph& graph() { return graph_; }
  const MeasurementLog& log() const { return log_; }

  void x(VertexId v, VertexId w, Category c) {
    apply_x(graph_, v, w);
    log_.append(Measurement::x(v, w));
    tally(c);
  }

  void z(VertexId v) {
    apply_z(graph_, v);
    log_.append(Measurement::z(v));
    tally(Category::Isolation);
  }

  /// Z-measures every non-party neighbor of any party, ascending id.
  void isolate_parties() {
    const VertexSet party_set = parties_.as_set(graph_.order());
    VertexSet doomed(graph_.order());
    for (const VertexId p : parties_.parties) doomed |= graph_.row(p);
    doomed -= party_set;
    doomed.for_each([&](VertexId v) { z(v); });
  }

  RoutingOutcome finish() && {
    RoutingOutcome out;
    out.success = is_isolated_entangled(graph_, parties_);
    if (!out.success) out.note = "parties are not a connected, isolated subgraph";
    out.final_graph = std::move(graph_);
    out.parties = std::move(parties_);
    out.log = std::move(log_);
    out.counts = counts_;
    return out;
  }

 private:
  void tally(Category c) {
    switch (c) {
      case Category::Path: ++counts_.path_x; break;
      case Category::Root: ++counts_.root_x; break;
      case Category::Isolation: ++counts_.isolation_z; break;
    }
  }

  Graph graph_;
  PartySet parties_;
  MeasurementLog log_;
  RoutingCounts counts_;
};

void validate_parties(const Graph& g, const PartySet& parties, std::size_t min_size) {
  if (parties.size() < min_size)
    throw DomainError("at least " + std::to_string(min_size) + " parties are required");
  VertexSet seen(g.order());
  for (const VertexId p : parties.parties) {
    if (!g.is_active(p)) throw DomainError("party " + std::to_string(p) + " is not an active vertex");
    if (seen.test(p)) throw DomainError("party " + std::to_string(p) + " appears twice");
    seen.set(p);
  }
}

/// Lowest-id party adjacent to v, preferring `preferred` candidates.
std::optional<VertexId> party_neighbor(const Graph& g, VertexId v, const std::vector<VertexId>& preferred,
                                       const PartySet& parties) {
  for (const VertexId p : preferred)
    if (g.adjacent(v, p)) return p;
  std::vector<VertexId> sorted = parties.parties;
  std::sort(sorted.begin(), sorted.end());
  for (const VertexId p : sorted)
    if (g.adjacent(v, p)) return p;
  return std::nullopt;
}

RoutingOutcome run_dodag_x(const Graph& g_tree, const DodagTree& t, const PartySet& parties,
                           DodagXTrace* trace) {
  validate_parties(g_tree, parties, 2);
  for (const VertexId p : parties.parties)
    if (!t.contains(p)) throw DomainError("party " + std::to_string(p) + " is not in the DODAG");

  std::vector<VertexId> order = parties.parties;
  std::sort(order.begin(), order.end());

  // Step 2: move the root down to the deepest vertex on every party's root path.
  VertexId root = order.front();
  for (const VertexId p : order) root = lowest_common_ancestor(t, root, p);

  // Step 3.
  const IntersectionMap inter = intersections(t, parties);

  Run run(g_tree, parties);
  VertexSet measured(g_tree.order());
  std::map<VertexId, VertexId> nearest;

  // Step 4: each party to its nearest intersection node other than itself.
  for (const VertexId i : order) {
    if (i == root) continue;
    VertexId target = root;
    for (const VertexId j : order) {
      if (j == i) continue;
      const VertexId a = inter.at(i, j);
      if (a != i && t.depth[a] > t.depth[target]) target = a;
    }
    nearest[i] = target;
    for (const VertexId v : path_to_ancestor(t, i, target).interior()) {
      if (measured.test(v)) continue;
      run.x(v, i, Category::Path);
      measured.set(v);
    }
  }
  if (trace) trace->after_step4 = run.graph();

  // Step 5: bring every non-root, non-party intersection node to the root.
  std::vector<VertexId> pending;
  for (const VertexId a : inter.nodes())
    if (a != root && !parties.contains(a)) pending.push_back(a);
  std::stable_sort(pending.begin(), pending.end(),
                   [&](VertexId x, VertexId y) { return t.depth[x] < t.depth[y]; });
  for (const VertexId a : pending) {
    const auto& path = path_to_ancestor(t, a, root).vertices;
    const std::size_t m = path.size();
    // 1-based position k is path[k - 1]; measure even positions short of the root.
    for (std::size_t k = 2; k < m; k += 2) {
      if (measured.test(path[k - 1])) continue;
      run.x(path[k - 1], path[k - 2], Category::Path);
      measured.set(path[k - 1]);
    }
    if (m % 2 == 0) {
      const VertexId v = path[m - 2];
      if (measured.test(v)) continue;
      std::vector<VertexId> owners;
      for (const auto& [pair, node] : inter.pairs()) {
        if (node != a) continue;
        owners.push_back(pair.first);
        owners.push_back(pair.second);
      }
      std::sort(owners.begin(), owners.end());
      const auto w = party_neighbor(run.graph(), v, owners, parties);
      if (!w)
        throw WitnessNotNeighborError("no party adjacent to " + std::to_string(v) +
                                      " for the parity-fixing X measurement");
      run.x(v, *w, Category::Path);
      measured.set(v);
    }
  }

  // Step 6.
  if (!parties.contains(root)) {
    const auto w = party_neighbor(run.graph(), root, {}, parties);
    if (!w) throw WitnessNotNeighborError("no party adjacent to the root " + std::to_string(root));
    run.x(root, *w, Category::Root);
  }
  if (trace) trace->after_step6 = run.graph();

  // Step 7.
  run.isolate_parties();

  if (trace) {
    trace->root = root;
    trace->intersections = inter;
    trace->nearest = std::move(nearest);
  }
  return std::move(run).finish();
}

void x_chain(Run& run, const OrderedPath& path) {
  const VertexId witness = path.front();
  for (const VertexId v : path.interior()) run.x(v, witness, Category::Path);
}

/// One X-protocol triplet run: entangle order[0] with order[1] along a shortest
/// path avoiding order[2], then order[2] with whichever of the two is closer
/// in the evolved graph (order[1] on ties), then isolate.
RoutingOutcome triplet_attempt(const Graph& g, const PartySet& parties, const std::array<VertexId, 3>& order) {
  const VertexSet blocked = parties.as_set(g.order());
  const auto [p, q, r] = order;
  Run run(g, parties);

  OrderedPath first;
  try {
    first = shortest_path(run.graph(), p, q, &blocked);
  } catch (const NoPathError& e) {
    throw RoutingFailedError(e.what(), run.log());
  }
  x_chain(run, first);

  std::optional<OrderedPath> from_q, from_p;
  try {
    from_q = shortest_path(run.graph(), q, r, &blocked);
  } catch (const NoPathError&) {
  }
  try {
    from_p = shortest_path(run.graph(), p, r, &blocked);
  } catch (const NoPathError&) {
  }
  if (!from_q && !from_p) throw RoutingFailedError("third party is unreachable from the entangled pair", run.log());
  x_chain(run, (from_q && (!from_p || from_q->size() <= from_p->size())) ? *from_q : *from_p);

  run.isolate_parties();
  return std::move(run).finish();
}

}  // namespace

bool PartySet::contains(VertexId v) const { return std::find(parties.begin(), parties.end(), v) != parties.end(); }

VertexSet PartySet::as_set(std::size_t capacity) const {
  VertexSet s(capacity);
  for (const VertexId p : parties) s.set(p);
  return s;
}

void IntersectionMap::set(VertexId i, VertexId j, VertexId node) { nodes_[std::minmax(i, j)] = node; }

VertexId IntersectionMap::at(VertexId i, VertexId j) const {
  const auto it = nodes_.find(std::minmax(i, j));
  if (it == nodes_.end())
    throw DomainError("no intersection recorded for {" + std::to_string(i) + "," + std::to_string(j) + "}");
  return it->second;
}

std::vector<VertexId> IntersectionMap::nodes() const {
  std::vector<VertexId> out;
  for (const auto& [pair, node] : nodes_) out.push_back(node);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_isolated_entangled(const Graph& g, const PartySet& parties) {
  const VertexSet party_set = parties.as_set(g.order());
  for (const VertexId p : parties.parties) {
    if (!g.is_active(p)) return false;
    if (!(g.row(p) - party_set).empty()) return false;
  }
  return is_connected_within(g, party_set);
}

IntersectionMap intersections(const DodagTree& t, const PartySet& parties) {
  IntersectionMap out;
  for (std::size_t x = 0; x < parties.size(); ++x)
    for (std::size_t y = x + 1; y < parties.size(); ++y) {
      const VertexId i = parties.parties[x];
      const VertexId j = parties.parties[y];
      out.set(i, j, lowest_common_ancestor(t, i, j));
    }
  return out;
}

RoutingOutcome dodag_x(const Graph& g_tree, const DodagTree& t, const PartySet& parties, DodagXTrace* trace) {
  if (parties.size() < 2 || parties.size() > 3) throw DomainError("DODAG-X takes two or three parties");
  return run_dodag_x(g_tree, t, parties, trace);
}

RoutingOutcome dodag_x_nparty(const Graph& g_tree, const DodagTree& t, const PartySet& parties,
                              DodagXTrace* trace) {
  try {
    return run_dodag_x(g_tree, t, parties, trace);
  } catch (const WitnessNotNeighborError& e) {
    RoutingOutcome out;
    out.final_graph = g_tree;
    out.parties = parties;
    out.success = false;
    out.note = e.what();
    return out;
  }
}

RoutingOutcome x_protocol_pair(const Graph& g, VertexId a, VertexId b) {
  const PartySet parties{{a, b}};
  validate_parties(g, parties, 2);
  Run run(g, parties);
  x_chain(run, shortest_path(g, a, b));
  run.isolate_parties();
  return std::move(run).finish();
}

RoutingOutcome x_protocol_triplet(const Graph& g, VertexId a, VertexId b, VertexId c) {
  const PartySet parties{{a, b, c}};
  validate_parties(g, parties, 3);

  // Each ordering names the stage-1 pair first. Orderings are tried in turn
  // on fresh copies of g; the first successful run is returned. On a tree
  // the third party may sit between the other two, and on graphs with twin
  // vertices an X measurement can cut the third party off.
  const std::array<std::array<VertexId, 3>, 3> orders{{{a, b, c}, {a, c, b}, {b, c, a}}};
  std::optional<RoutingOutcome> first_completed;
  MeasurementLog last_partial;
  for (const auto& order : orders) {
    try {
      RoutingOutcome out = triplet_attempt(g, parties, order);
      if (out.success) return out;
      if (!first_completed) first_completed = std::move(out);
    } catch (const RoutingFailedError& e) {
      last_partial = e.partial_log();
    }
  }
  if (first_completed) return std::move(*first_completed);
  throw RoutingFailedError("no ordering of the parties could be routed", last_partial);
}

RoutingOutcome repeater_protocol(const Graph& g, VertexId a, VertexId b) {
  const PartySet parties{{a, b}};
  validate_parties(g, parties, 2);
  const OrderedPath path = shortest_path(g, a, b);
  VertexSet on_path(g.order());
  for (const VertexId v : path.vertices) on_path.set(v);
  VertexSet off_path(g.order());
  for (const VertexId v : path.vertices) off_path |= g.row(v);
  off_path -= on_path;

  Run run(g, parties);
  off_path.for_each([&](VertexId v) { run.z(v); });
  x_chain(run, path);
  run.isolate_parties();
  return std::move(run).finish();
}

}  // namespace dodagx
