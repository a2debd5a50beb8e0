#include <doctest.h>

#include "dodagx/graph.hpp"
#include "dodagx/topology.hpp"
#include "support.hpp"

using namespace dodagx;
using testing::edge_set;
using testing::edges_of;

TEST_CASE("neighborhood") {
  const Graph path = testing::path_graph(3);
  CHECK(neighborhood(path, 1).to_vector() == std::vector<VertexId>{0, 2});
  CHECK(neighborhood(Graph(3), 2).empty());
  const Graph grid = topology::generate(topology::Grid{3, 3});
  CHECK(neighborhood(grid, 4).to_vector() == std::vector<VertexId>{1, 3, 5, 7});
  CHECK_THROWS_AS(neighborhood(grid, 9), DomainError);
  CHECK_THROWS_AS(neighborhood(delete_vertex(grid, 4), 4), DomainError);
}

TEST_CASE("delete_vertex") {
  const Graph triangle = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  const Graph t = delete_vertex(triangle, 2);
  CHECK(edge_set(t) == edges_of({{0, 1}}));
  CHECK_FALSE(t.is_active(2));
  CHECK(edge_set(triangle).size() == 3);  // input untouched

  const Graph p = delete_vertex(testing::path_graph(3), 1);
  CHECK(p.edge_count() == 0);
  CHECK(p.active().to_vector() == std::vector<VertexId>{0, 2});

  const Graph star = topology::generate(topology::Star{5});
  CHECK(delete_vertex(star, 0).edge_count() == 0);
  CHECK_THROWS_AS(delete_vertex(t, 2), DomainError);
}

TEST_CASE("delete_vertex removes exactly the incident edges") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = testing::random_graph(12, 0.4, seed);
    const VertexId v = static_cast<VertexId>(seed % 12);
    const Graph d = delete_vertex(g, v);
    CHECK(d.active_count() == g.active_count() - 1);
    CHECK(d.edge_count() == g.edge_count() - g.degree(v));
    CHECK(edge_set(d) == testing::matrix_edges(testing::matrix_delete(testing::to_matrix(g), v)));
  }
}

TEST_CASE("local_complement") {
  CHECK(edge_set(local_complement(testing::path_graph(3), 1)) == edges_of({{0, 1}, {1, 2}, {0, 2}}));
  const Graph path = testing::path_graph(5);
  CHECK(local_complement(path, 0) == path);
  const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(edge_set(local_complement(star, 0)) == edges_of({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK_THROWS_AS(local_complement(delete_vertex(star, 3), 3), DomainError);
}

TEST_CASE("local_complement matches a matrix reference, is an involution and keeps N(v)") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 63;
    const Graph g = testing::random_graph(n, 0.3, seed);
    for (VertexId v = 0; v < n; v += 1 + static_cast<VertexId>(n / 7)) {
      const Graph lc = local_complement(g, v);
      CHECK(edge_set(lc) == testing::matrix_edges(testing::matrix_local_complement(testing::to_matrix(g), v)));
      CHECK(local_complement(lc, v) == g);
      CHECK(neighborhood(lc, v) == neighborhood(g, v));
    }
  }
}

TEST_CASE("shortest_path") {
  CHECK(shortest_path(testing::path_graph(3), 0, 2).vertices == std::vector<VertexId>{0, 1, 2});
  const Graph grid = topology::generate(topology::Grid{3, 3});
  CHECK(shortest_path(grid, 0, 8).vertices == std::vector<VertexId>{0, 1, 2, 5, 8});
  CHECK(shortest_path(grid, 4, 4).vertices == std::vector<VertexId>{4});
  CHECK_THROWS_AS(shortest_path(Graph(2), 0, 1), NoPathError);

  VertexSet blocked(9);
  blocked.set(1);
  CHECK(shortest_path(grid, 0, 2, &blocked).size() == 5);
  blocked.set(3);
  CHECK_THROWS_AS(shortest_path(grid, 0, 8, &blocked), NoPathError);
}

TEST_CASE("shortest_path length equals the brute-force minimum") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const Graph g = testing::random_graph(n, 0.35, seed + 100);
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = 0; b < n; ++b) {
        const std::size_t brute = testing::brute_shortest_path(g, a, b);
        if (brute == 0) {
          CHECK_THROWS_AS(shortest_path(g, a, b), NoPathError);
          continue;
        }
        const OrderedPath p = shortest_path(g, a, b);
        CHECK(p.size() == brute);
        CHECK(is_valid_path(g, p));
        CHECK(p.front() == a);
        CHECK(p.back() == b);
      }
  }
}

TEST_CASE("eccentricity") {
  const Graph grid = topology::generate(topology::Grid{3, 3});
  CHECK(eccentricity(grid, 4) == 2);
  CHECK(eccentricity(grid, 0) == 4);
  CHECK(eccentricity(testing::path_graph(5), 2) == 2);
  CHECK_THROWS_AS(eccentricity(Graph(2), 0), DomainError);
}

TEST_CASE("is_tree") {
  CHECK(is_tree(testing::path_graph(6)));
  CHECK_FALSE(is_tree(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK_FALSE(is_tree(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  CHECK(is_tree(delete_vertex(testing::path_graph(4), 3)));
}

TEST_CASE("tree paths share exactly the middle vertex between positions k and k+2") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph t = testing::random_tree(5 + seed, seed);
    const OrderedPath p = shortest_path(t, 0, static_cast<VertexId>(4 + seed));
    for (std::size_t k = 0; k + 2 < p.size(); ++k)
      CHECK((neighborhood(t, p.vertices[k]) & neighborhood(t, p.vertices[k + 2])).to_vector() ==
            std::vector<VertexId>{p.vertices[k + 1]});
  }
}

TEST_CASE("from_edges rejects bad input and collapses duplicates") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), DomainError);
  CHECK(Graph::from_edges(3, {{0, 1}, {1, 0}}).edge_count() == 1);
}

TEST_CASE("is_valid_path") {
  const Graph g = testing::path_graph(4);
  CHECK(is_valid_path(g, OrderedPath{{0, 1, 2}}));
  CHECK_FALSE(is_valid_path(g, OrderedPath{{0, 2}}));
  CHECK_FALSE(is_valid_path(g, OrderedPath{{0, 1, 0}}));
  CHECK_FALSE(is_valid_path(delete_vertex(g, 1), OrderedPath{{0, 1}}));
}
