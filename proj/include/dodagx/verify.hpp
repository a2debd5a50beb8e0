#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dodagx/graph.hpp"

// Self-checks behind `dodagx verify`: the graph rewrite rules against the
// state-vector oracle, and the routing theorems on random trees.
namespace dodagx::verify {

struct CheckResult {
  explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;  ///< first failing case, if any

  bool passed() const { return failures == 0 && cases > 0; }
};

/// One representative per isomorphism class of simple graphs on n vertices.
std::vector<Graph> nonisomorphic_graphs(std::size_t n);

/// G(n, q) with a seeded generator.
Graph random_graph(std::size_t n, double edge_probability, std::uint64_t seed);

/// Every Z measurement and every X measurement (each witness) on every graph
/// in `graphs` agrees with the oracle.
CheckResult check_rewrite_rules(const std::string& name, const std::vector<Graph>& graphs);

/// `count` random graphs with 1..max_n vertices satisfy every stabilizer
/// generator to within `tolerance`.
CheckResult check_stabilizers(std::size_t count, std::size_t max_n, std::uint64_t seed, double tolerance = 1e-10);

/// Closed-form endpoint neighborhoods against sequential X measurements on
/// every leaf-to-leaf path of `count` random trees with 3..max_n vertices.
CheckResult check_closed_forms(std::size_t count, std::size_t max_n, std::uint64_t seed);

/// DODAG-X on random trees with random triplets. Returns three results:
/// each party is an intersection node or adjacent to one after Step 4; a party
/// that is an intersection node is adjacent to the root after Step 4; the
/// final triplet is connected and isolated.
std::vector<CheckResult> check_tree_properties(std::size_t trees, std::size_t max_n, std::size_t triplets_per_tree,
                                               std::uint64_t seed);

/// DODAG-X and the X-protocol use the same total on random tree triplets.
CheckResult check_equal_counts_on_trees(std::size_t trees, std::size_t max_n, std::size_t triplets_per_tree,
                                        std::uint64_t seed);

struct OracleSuiteConfig {
  std::size_t exhaustive_max_n = 5;
  std::size_t random_graphs = 200;
  std::size_t random_n = 6;
  std::size_t stabilizer_graphs = 50;
  std::size_t stabilizer_max_n = 8;
  std::uint64_t seed = 0;
};

struct TheoremSuiteConfig {
  std::size_t closed_form_trees = 100;
  std::size_t closed_form_max_n = 40;
  std::size_t property_trees = 500;
  std::size_t property_max_n = 50;
  std::size_t property_triplets = 20;
  std::size_t count_trees = 200;
  std::size_t count_max_n = 50;
  std::size_t count_triplets = 200;
  std::uint64_t seed = 0;
};

std::vector<CheckResult> run_oracle_suite(const OracleSuiteConfig& config);
std::vector<CheckResult> run_theorem_suite(const TheoremSuiteConfig& config);

}  // namespace dodagx::verify
