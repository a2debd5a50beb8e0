#include "dodagx/topology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "dodagx/dodag.hpp"
#include "dodagx/rng.hpp"

namespace dodagx::topology {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Graph grid(const Grid& s) {
  Graph g(s.rows * s.cols);
  for (std::size_t r = 0; r < s.rows; ++r) {
    for (std::size_t c = 0; c < s.cols; ++c) {
      const auto v = static_cast<VertexId>(r * s.cols + c);
      if (c + 1 < s.cols) g.add_edge(v, v + 1);
      if (r + 1 < s.rows) g.add_edge(v, static_cast<VertexId>(v + s.cols));
    }
  }
  return g;
}

Graph ring_lattice(std::size_t n, std::size_t half) {
  Graph g(n);
  for (std::size_t j = 1; j <= half; ++j)
    for (std::size_t u = 0; u < n; ++u) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>((u + j) % n));
  return g;
}

Graph watts_strogatz_once(const SmallWorld& s, std::uint64_t seed) {
  const std::size_t half = s.k / 2;
  Graph g = ring_lattice(s.n, half);
  Rng rng(seed);
  for (std::size_t j = 1; j <= half; ++j) {
    for (std::size_t ui = 0; ui < s.n; ++ui) {
      if (rng.uniform() >= s.p) continue;
      const auto u = static_cast<VertexId>(ui);
      const auto v = static_cast<VertexId>((ui + j) % s.n);
      if (g.degree(u) >= s.n - 1) continue;
      VertexId w;
      do {
        w = static_cast<VertexId>(rng.below(s.n));
      } while (w == u || g.adjacent(u, w));
      g.remove_edge(u, v);
      g.add_edge(u, w);
    }
  }
  return g;
}

Graph small_world(const SmallWorld& s) {
  for (int attempt = 0; attempt < s.max_attempts; ++attempt) {
    Graph g = watts_strogatz_once(s, derive_seed(s.seed, {static_cast<std::uint64_t>(attempt)}));
    if (is_connected(g)) return g;
  }
  throw GenerationFailedError("no connected small-world graph (n=" + std::to_string(s.n) + ", k=" +
                              std::to_string(s.k) + ", p=" + std::to_string(s.p) + ") after " +
                              std::to_string(s.max_attempts) + " attempts");
}

Graph random_tree(const RandomTree& s) {
  Graph g(s.n);
  if (s.n < 2) return g;
  if (s.n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  Rng rng(derive_seed(s.seed, {0x7472656555ULL}));
  std::vector<VertexId> code(s.n - 2);
  for (auto& c : code) c = static_cast<VertexId>(rng.below(s.n));

  std::vector<std::size_t> degree(s.n, 1);
  for (auto c : code) ++degree[c];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < s.n; ++v)
    if (degree[v] == 1) leaves.push(v);
  for (auto c : code) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    g.add_edge(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const VertexId a = leaves.top();
  leaves.pop();
  g.add_edge(a, leaves.top());
  return g;
}

}  // namespace

void validate(const TopologySpec& spec) {
  std::visit(Overloaded{
                 [](const Grid& s) {
                   if (s.rows < 1 || s.cols < 1) throw DomainError("grid needs rows >= 1 and cols >= 1");
                 },
                 [](const SmallWorld& s) {
                   if (s.k < 2 || s.k >= s.n) throw DomainError("small-world needs 2 <= k < n");
                   if (!(s.p >= 0.0 && s.p <= 1.0)) throw DomainError("small-world needs 0 <= p <= 1");
                   if (s.max_attempts < 1) throw DomainError("small-world needs max_attempts >= 1");
                 },
                 [](const Star& s) {
                   if (s.n < 2) throw DomainError("star needs n >= 2");
                 },
                 [](const Ring& s) {
                   if (s.n < 3) throw DomainError("ring needs n >= 3");
                 },
                 [](const RandomTree& s) {
                   if (s.n < 1) throw DomainError("random tree needs n >= 1");
                 },
             },
             spec);
}

Graph generate(const TopologySpec& spec) {
  validate(spec);
  return std::visit(Overloaded{
                        [](const Grid& s) { return grid(s); },
                        [](const SmallWorld& s) { return small_world(s); },
                        [](const Star& s) {
                          Graph g(s.n);
                          for (VertexId v = 1; v < s.n; ++v) g.add_edge(0, v);
                          return g;
                        },
                        [](const Ring& s) { return ring_lattice(s.n, 1); },
                        [](const RandomTree& s) { return random_tree(s); },
                    },
                    spec);
}

std::string family_name(const TopologySpec& spec) {
  return std::visit(Overloaded{
                        [](const Grid&) { return std::string("grid"); },
                        [](const SmallWorld&) { return std::string("smallworld"); },
                        [](const Star&) { return std::string("star"); },
                        [](const Ring&) { return std::string("ring"); },
                        [](const RandomTree&) { return std::string("tree"); },
                    },
                    spec);
}

std::vector<DepthPoint> dodag_depth_scaling(DepthFamily family, const std::vector<std::size_t>& sizes,
                                            std::size_t k, double p, std::size_t seeds,
                                            std::uint64_t master_seed) {
  std::vector<DepthPoint> out;
  for (const std::size_t size : sizes) {
    switch (family) {
      case DepthFamily::SquareGrid: {
        const DodagTree t = build_dodag(generate(Grid{size, size}));
        out.push_back({size * size, static_cast<double>(t.height())});
        break;
      }
      case DepthFamily::LineGrid: {
        const DodagTree t = build_dodag(generate(Grid{1, size}));
        out.push_back({size, static_cast<double>(t.height())});
        break;
      }
      case DepthFamily::SmallWorld: {
        double total = 0.0;
        for (std::size_t s = 0; s < seeds; ++s) {
          const auto seed = derive_seed(master_seed, {size, k, static_cast<std::uint64_t>(p * 1e6), s});
          total += build_dodag(generate(SmallWorld{size, k, p, seed})).height();
        }
        out.push_back({size, total / static_cast<double>(std::max<std::size_t>(seeds, 1))});
        break;
      }
    }
  }
  return out;
}

}  // namespace dodagx::topology
