#include <doctest.h>

#include "dodagx/verify.hpp"

using namespace dodagx;
using namespace dodagx::verify;

TEST_CASE("nonisomorphic graph counts") {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34};
  for (std::size_t n = 1; n <= 5; ++n) CHECK(nonisomorphic_graphs(n).size() == expected[n - 1]);
  CHECK(nonisomorphic_graphs(6).size() == 156);
}

TEST_CASE("random_graph is seeded") {
  CHECK(random_graph(10, 0.5, 3) == random_graph(10, 0.5, 3));
  CHECK(random_graph(10, 0.0, 3).edge_count() == 0);
  CHECK(random_graph(10, 1.0, 3).edge_count() == 45);
}

TEST_CASE("individual checks pass") {
  const CheckResult rules = check_rewrite_rules("n<=4", nonisomorphic_graphs(4));
  CHECK(rules.passed());
  CHECK(rules.cases > 11);
  CHECK(check_stabilizers(10, 6, 1).passed());
  CHECK(check_closed_forms(10, 20, 2).passed());
  for (const CheckResult& r : check_tree_properties(20, 25, 10, 3)) CHECK_MESSAGE(r.passed(), r.name << ": " << r.detail);
  CHECK(check_equal_counts_on_trees(20, 25, 10, 4).passed());
}

TEST_CASE("a check with no cases does not pass") {
  const CheckResult empty = check_rewrite_rules("none", {});
  CHECK(empty.cases == 0);
  CHECK_FALSE(empty.passed());
  CheckResult failing("failing");
  failing.cases = 3;
  failing.failures = 1;
  CHECK_FALSE(failing.passed());
}

TEST_CASE("reduced suites") {
  OracleSuiteConfig oc;
  oc.exhaustive_max_n = 4;
  oc.random_graphs = 5;
  oc.stabilizer_graphs = 5;
  for (const CheckResult& r : run_oracle_suite(oc)) CHECK_MESSAGE(r.passed(), r.name << ": " << r.detail);

  TheoremSuiteConfig tc;
  tc.closed_form_trees = 5;
  tc.property_trees = 10;
  tc.count_trees = 10;
  tc.count_triplets = 10;
  const auto results = run_theorem_suite(tc);
  CHECK(results.size() == 5);
  for (const CheckResult& r : results) CHECK_MESSAGE(r.passed(), r.name << ": " << r.detail);
}
