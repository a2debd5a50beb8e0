#include <doctest.h>

#include <set>

#include "dodagx/sweep_kernels.hpp"
#include "dodagx/topology.hpp"
#include "support.hpp"

using namespace dodagx;

TEST_CASE("triplet and pair enumeration") {
  const Graph g(7);
  const auto t = all_triplets(g);
  CHECK(t.size() == 35);
  CHECK(t.front() == Triplet{0, 1, 2});
  CHECK(t.back() == Triplet{4, 5, 6});
  CHECK(all_pairs(g).size() == 21);
  CHECK(all_triplets(delete_vertex(g, 0)).size() == 20);
  CHECK(all_triplets(Graph(2)).empty());
}

TEST_CASE("sample_triplets") {
  const Graph g(50);
  const auto s = sample_triplets(g, 500, 9);
  CHECK(s.size() == 500);
  CHECK(s == sample_triplets(g, 500, 9));
  CHECK_FALSE(s == sample_triplets(g, 500, 10));
  std::set<std::tuple<VertexId, VertexId, VertexId>> seen;
  for (const Triplet& t : s) {
    CHECK(t.a < t.b);
    CHECK(t.b < t.c);
    seen.emplace(t.a, t.b, t.c);
  }
  CHECK(seen.size() == 500);
  CHECK(std::is_sorted(s.begin(), s.end(), [](const Triplet& x, const Triplet& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  }));
  CHECK(sample_triplets(Graph(6), 1000, 1) == all_triplets(Graph(6)));
}

TEST_CASE("parallel kernels match the serial reference") {
  for (const auto& spec : {topology::TopologySpec{topology::Grid{5, 6}},
                           topology::TopologySpec{topology::SmallWorld{24, 6, 0.4, 3}},
                           topology::TopologySpec{topology::RandomTree{30, 2}}}) {
    const Graph g = topology::generate(spec);
    const DodagTree tree = build_dodag(g);
    const auto triplets = all_triplets(g);
    const auto serial = evaluate_triplets_serial(g, tree, triplets);
    for (const int threads : {1, 2, 4, 7}) CHECK(evaluate_triplets_parallel(g, tree, triplets, threads) == serial);

    const auto pairs = all_pairs(g);
    const auto pserial = evaluate_pairs_serial(g, pairs);
    for (const int threads : {1, 3}) CHECK(evaluate_pairs_parallel(g, pairs, threads) == pserial);
  }
}

TEST_CASE("kernel results match direct protocol calls") {
  const Graph g = topology::generate(topology::Grid{3, 4});
  const DodagTree tree = build_dodag(g);
  const auto triplets = all_triplets(g);
  const auto results = evaluate_triplets_parallel(g, tree, triplets, 2);
  for (std::size_t i = 0; i < triplets.size(); ++i) {
    const auto [a, b, c] = triplets[i];
    CHECK(results[i].x.counts == x_protocol_triplet(g, a, b, c).counts);
    CHECK(results[i].dodag.counts == dodag_x(tree.tree_graph, tree, PartySet{{a, b, c}}).counts);
    CHECK(results[i].dodag.success);
  }
}

TEST_CASE("an unroutable X-protocol triplet is reported as unsuccessful") {
  const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}});
  const RunSummary s = summarize_x_triplet(g, {0, 2, 3});
  CHECK_FALSE(s.success);
}
