#include "dodagx/verify.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "dodagx/dodag.hpp"
#include "dodagx/measurement.hpp"
#include "dodagx/protocols.hpp"
#include "dodagx/rng.hpp"
#include "dodagx/state_oracle.hpp"
#include "dodagx/topology.hpp"

namespace dodagx::verify {
namespace {

std::string describe(const Graph& g) {
  std::string s = "n=" + std::to_string(g.order()) + " edges={";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) s += ',';
    s += std::to_string(u) + '-' + std::to_string(v);
    first = false;
  }
  return s + '}';
}

void fail(CheckResult& r, const std::string& what) {
  if (r.failures++ == 0) r.detail = what;
}

Graph random_tree(Rng& rng, std::size_t max_n) {
  const std::size_t n = 3 + rng.below(max_n - 2);
  return topology::generate(topology::RandomTree{n, rng.next()});
}

std::array<VertexId, 3> random_triplet(Rng& rng, std::size_t n) {
  std::array<VertexId, 3> t{};
  t[0] = static_cast<VertexId>(rng.below(n));
  do t[1] = static_cast<VertexId>(rng.below(n));
  while (t[1] == t[0]);
  do t[2] = static_cast<VertexId>(rng.below(n));
  while (t[2] == t[0] || t[2] == t[1]);
  return t;
}

std::string triplet_text(const std::array<VertexId, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
  std::vector<Edge> slots;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  if (slots.size() > 20) throw CapacityError("isomorphism-class enumeration is limited to 6 vertices");

  std::vector<std::vector<VertexId>> perms;
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  const auto slot_of = [&](VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(std::find(slots.begin(), slots.end(), Edge{u, v}) - slots.begin());
  };
  std::vector<std::vector<std::size_t>> slot_maps;
  for (const auto& p : perms) {
    std::vector<std::size_t> m(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) m[s] = slot_of(p[slots[s].first], p[slots[s].second]);
    slot_maps.push_back(std::move(m));
  }

  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
    std::uint32_t canon = mask;
    for (const auto& m : slot_maps) {
      std::uint32_t image = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1U) image |= std::uint32_t{1} << m[s];
      canon = std::min(canon, image);
    }
    if (!seen.insert(canon).second) continue;
    std::vector<Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (canon >> s & 1U) edges.push_back(slots[s]);
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

Graph random_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.uniform() < edge_probability) g.add_edge(u, v);
  return g;
}

CheckResult check_rewrite_rules(const std::string& name, const std::vector<Graph>& graphs) {
  CheckResult r{name};
  for (const Graph& g : graphs) {
    g.active().for_each([&](VertexId v) {
      ++r.cases;
      if (!oracle::verify_measurement_rule(g, Measurement::z(v)))
        fail(r, "Z[" + std::to_string(v) + "] on " + describe(g));
      g.row(v).for_each([&](VertexId w) {
        ++r.cases;
        if (!oracle::verify_measurement_rule(g, Measurement::x(v, w)))
          fail(r, "X[" + std::to_string(v) + "," + std::to_string(w) + "] on " + describe(g));
      });
    });
  }
  return r;
}

CheckResult check_stabilizers(std::size_t count, std::size_t max_n, std::uint64_t seed, double tolerance) {
  CheckResult r{"stabilizer generators"};
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng.below(max_n);
    const Graph g = random_graph(n, 0.5, rng.next());
    ++r.cases;
    const double residual = oracle::stabilizer_residual(oracle::build_graph_state(g), g);
    if (!(residual < tolerance)) fail(r, "residual " + std::to_string(residual) + " on " + describe(g));
  }
  return r;
}

CheckResult check_closed_forms(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  CheckResult r{"closed-form endpoint neighborhoods"};
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = random_tree(rng, max_n);
    std::vector<VertexId> leaves;
    g.active().for_each([&](VertexId v) {
      if (g.degree(v) == 1) leaves.push_back(v);
    });
    for (const VertexId s : leaves)
      for (const VertexId e : leaves) {
        if (s == e) continue;
        const OrderedPath path = shortest_path(g, s, e);
        if (path.size() < 3) continue;
        ++r.cases;
        const EndpointNeighborhoods predicted = predict_endpoint_neighborhoods(g, path);
        Graph evolved = g;
        for (const VertexId v : path.interior()) apply_x(evolved, v, s);
        if (predicted.first != evolved.row(s) || predicted.last != evolved.row(e))
          fail(r, "path " + std::to_string(s) + "->" + std::to_string(e) + " on " + describe(g));
      }
  }
  return r;
}

std::vector<CheckResult> check_tree_properties(std::size_t trees, std::size_t max_n, std::size_t triplets_per_tree,
                                               std::uint64_t seed) {
  CheckResult step4{"parties reach an intersection node after Step 4"};
  CheckResult corollary{"party intersections reach the root after Step 4"};
  CheckResult success{"triplet connected and isolated"};
  Rng rng(seed);
  for (std::size_t i = 0; i < trees; ++i) {
    const Graph g = random_tree(rng, max_n);
    const DodagTree t = build_dodag(g);
    for (std::size_t s = 0; s < triplets_per_tree; ++s) {
      const auto tri = random_triplet(rng, g.order());
      const PartySet parties{{tri[0], tri[1], tri[2]}};
      const std::string where = triplet_text(tri) + " on " + describe(g);
      DodagXTrace trace;
      RoutingOutcome out;
      try {
        out = dodag_x(t.tree_graph, t, parties, &trace);
      } catch (const std::exception& e) {
        fail(step4, where + ": " + e.what());
        ++step4.cases;
        continue;
      }
      // A later party's path can move an earlier party's link from its own
      // intersection node to another one, so any intersection node counts.
      VertexSet nodes(g.order());
      for (const VertexId a : trace.intersections.nodes()) nodes.set(a);
      nodes.set(trace.root);
      for (const VertexId p : parties.parties) {
        if (p == trace.root) continue;
        const bool is_intersection = nodes.test(p);
        ++step4.cases;
        if (!is_intersection && !trace.after_step4.row(p).intersects(nodes)) fail(step4, where);
        if (is_intersection) {
          ++corollary.cases;
          if (!trace.after_step4.adjacent(p, trace.root)) fail(corollary, where);
        }
      }
      ++success.cases;
      if (!out.success || !is_isolated_entangled(out.final_graph, parties)) fail(success, where);
    }
  }
  return {step4, corollary, success};
}

CheckResult check_equal_counts_on_trees(std::size_t trees, std::size_t max_n, std::size_t triplets_per_tree,
                                        std::uint64_t seed) {
  CheckResult r{"equal totals on trees"};
  Rng rng(seed);
  for (std::size_t i = 0; i < trees; ++i) {
    const Graph g = random_tree(rng, max_n);
    const DodagTree t = build_dodag(g);
    for (std::size_t s = 0; s < triplets_per_tree; ++s) {
      const auto tri = random_triplet(rng, g.order());
      ++r.cases;
      const std::string where = triplet_text(tri) + " on " + describe(g);
      try {
        const RoutingOutcome d = dodag_x(t.tree_graph, t, PartySet{{tri[0], tri[1], tri[2]}});
        const RoutingOutcome x = x_protocol_triplet(g, tri[0], tri[1], tri[2]);
        if (d.counts.total() != x.counts.total())
          fail(r, where + ": " + std::to_string(d.counts.total()) + " vs " + std::to_string(x.counts.total()));
      } catch (const std::exception& e) {
        fail(r, where + ": " + e.what());
      }
    }
  }
  return r;
}

std::vector<CheckResult> run_oracle_suite(const OracleSuiteConfig& config) {
  std::vector<Graph> small;
  for (std::size_t n = 1; n <= config.exhaustive_max_n; ++n)
    for (Graph& g : nonisomorphic_graphs(n)) small.push_back(std::move(g));
  std::vector<Graph> random;
  for (std::size_t i = 0; i < config.random_graphs; ++i)
    random.push_back(random_graph(config.random_n, 0.5, derive_seed(config.seed, {1, i})));

  return {check_rewrite_rules("rewrite rules, all graphs n<=" + std::to_string(config.exhaustive_max_n), small),
          check_rewrite_rules("rewrite rules, random graphs n=" + std::to_string(config.random_n), random),
          check_stabilizers(config.stabilizer_graphs, config.stabilizer_max_n, derive_seed(config.seed, {2}))};
}

std::vector<CheckResult> run_theorem_suite(const TheoremSuiteConfig& config) {
  std::vector<CheckResult> out;
  out.push_back(check_closed_forms(config.closed_form_trees, config.closed_form_max_n, derive_seed(config.seed, {1})));
  for (CheckResult& r : check_tree_properties(config.property_trees, config.property_max_n, config.property_triplets,
                                              derive_seed(config.seed, {2})))
    out.push_back(std::move(r));
  out.push_back(check_equal_counts_on_trees(config.count_trees, config.count_max_n, config.count_triplets,
                                            derive_seed(config.seed, {3})));
  return out;
}

}  // namespace dodagx::verify
