#include "dodagx/io.hpp"

#include <fstream>
#include <sstream>

namespace dodagx::io {
namespace {

std::size_t require_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw DomainError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  Json j;
  j["n"] = g.order();
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  const std::size_t n = require_index(require_field(j, "n"), "n");
  const Json& edges = require_field(j, "edges");
  if (!edges.is_array()) throw DomainError("'edges' must be an array");
  std::vector<Edge> list;
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw DomainError("each edge must be a [u, v] pair");
    list.emplace_back(static_cast<VertexId>(require_index(e[0], "edge endpoint")),
                      static_cast<VertexId>(require_index(e[1], "edge endpoint")));
  }
  return Graph::from_edges(n, list);
}

Json tree_to_json(const DodagTree& t) {
  Json parent = Json::array();
  for (std::size_t v = 0; v < t.parent.size(); ++v)
    parent.push_back(t.contains(static_cast<VertexId>(v)) ? static_cast<long long>(t.parent[v]) : -1LL);
  Json j;
  j["root"] = t.root;
  j["parent"] = std::move(parent);
  return j;
}

DodagTree tree_from_json(const Json& j, const Graph& g) {
  const std::size_t n = g.order();
  const auto root = static_cast<VertexId>(require_index(require_field(j, "root"), "root"));
  const Json& parent = require_field(j, "parent");
  if (!parent.is_array() || parent.size() != n) throw DomainError("'parent' must list one entry per vertex");
  if (!g.is_active(root)) throw DomainError("root is not an active vertex");

  DodagTree t;
  t.root = root;
  t.parent.assign(n, DodagTree::kNoParent);
  t.depth.assign(n, -1);
  t.tree_graph = Graph(n);
  for (VertexId v = 0; v < n; ++v) {
    const Json& p = parent[v];
    if (!p.is_number_integer()) throw DomainError("parent entries must be integers");
    const long long pv = p.get<long long>();
    if (pv < 0) {
      if (g.is_active(v)) throw DomainError("active vertex " + std::to_string(v) + " has no parent");
      t.tree_graph.remove_vertex(v);
      continue;
    }
    if (!g.is_active(v)) throw DomainError("inactive vertex " + std::to_string(v) + " has a parent");
    if (static_cast<std::size_t>(pv) >= n) throw DomainError("parent id out of range");
    t.parent[v] = static_cast<VertexId>(pv);
  }
  if (t.parent[root] != root) throw DomainError("parent of the root must be the root");

  for (VertexId v = 0; v < n; ++v) {
    if (!t.contains(v) || v == root) continue;
    const VertexId p = t.parent[v];
    if (!g.is_active(p) || !g.adjacent(v, p))
      throw DomainError("tree edge " + std::to_string(v) + "-" + std::to_string(p) + " is not a network edge");
    t.tree_graph.add_edge(v, p);
  }
  if (!is_tree(t.tree_graph)) throw DomainError("parent map does not form a spanning tree");
  const std::vector<int> dist = bfs_distances(t.tree_graph, root);
  for (VertexId v = 0; v < n; ++v)
    if (t.contains(v)) t.depth[v] = dist[v];
  return t;
}

Json log_to_json(const MeasurementLog& log) {
  Json out = Json::array();
  for (const Measurement& m : log.entries()) {
    Json e;
    e["kind"] = m.kind == PauliBasis::X ? "X" : "Z";
    e["target"] = m.target;
    e["witness"] = m.witness ? Json(*m.witness) : Json(nullptr);
    out.push_back(std::move(e));
  }
  return out;
}

MeasurementLog log_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("measurement log must be an array");
  MeasurementLog log;
  for (const Json& e : j) {
    const Json& kind = require_field(e, "kind");
    const auto target = static_cast<VertexId>(require_index(require_field(e, "target"), "target"));
    const Json& witness = require_field(e, "witness");
    if (kind == "Z") {
      if (!witness.is_null()) throw DomainError("Z measurements take no witness");
      log.append(Measurement::z(target));
    } else if (kind == "X") {
      log.append(Measurement::x(target, static_cast<VertexId>(require_index(witness, "witness"))));
    } else {
      throw DomainError("measurement kind must be \"X\" or \"Z\"");
    }
  }
  return log;
}

Json outcome_to_json(const RoutingOutcome& out, const std::string& protocol) {
  Json j;
  j["protocol"] = protocol;
  j["parties"] = out.parties.parties;
  j["success"] = out.success;
  Json counts;
  counts["path_x"] = out.counts.path_x;
  counts["root_x"] = out.counts.root_x;
  counts["isolation_z"] = out.counts.isolation_z;
  counts["x_count"] = out.counts.x_count();
  counts["z_count"] = out.counts.z_count();
  counts["total"] = out.counts.total();
  j["counts"] = std::move(counts);
  j["log"] = log_to_json(out.log);
  j["final_graph"] = graph_to_json(out.final_graph);
  j["active"] = out.final_graph.active().to_vector();
  if (!out.note.empty()) j["note"] = out.note;
  return j;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace dodagx::io
