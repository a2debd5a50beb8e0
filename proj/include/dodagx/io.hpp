#pragma once

#include <string>

#include <json.hpp>

#include "dodagx/dodag.hpp"
#include "dodagx/graph.hpp"
#include "dodagx/measurement.hpp"
#include "dodagx/protocols.hpp"

// JSON encodings. Object keys are written in a fixed order so output is
// byte-stable. Readers throw DomainError on malformed input.
namespace dodagx::io {

using Json = nlohmann::ordered_json;

/// {"n": N, "edges": [[u, v], ...]}, u < v, pairs sorted. Inactive vertices
/// are not recorded; see outcome_to_json for the active list.
Json graph_to_json(const Graph& g);
/// Accepts edges in any order or orientation.
Graph graph_from_json(const Json& j);

/// {"root": r, "parent": [...]}, parent[root] == root, -1 for vertices
/// outside the tree.
Json tree_to_json(const DodagTree& t);
/// Rebuilds depths and the tree graph; every tree edge must be an edge of g
/// and the parent map must form a spanning tree of g's active vertices.
DodagTree tree_from_json(const Json& j, const Graph& g);

/// [{"kind": "X"|"Z", "target": v, "witness": w|null}, ...]
Json log_to_json(const MeasurementLog& log);
MeasurementLog log_from_json(const Json& j);

/// Final graph, its active vertices, log, counts and success flag.
Json outcome_to_json(const RoutingOutcome& out, const std::string& protocol);

Json parse(const std::string& text);
Json read_file(const std::string& path);

}  // namespace dodagx::io
