#include "dodagx/sweep_kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

#include "dodagx/rng.hpp"

namespace dodagx {
namespace {

RunSummary summarize(const RoutingOutcome& out) { return {out.counts, out.success}; }

RunSummary summarize_partial(const MeasurementLog& log) {
  RunSummary s;
  s.counts.path_x = log.x_count();
  s.counts.isolation_z = log.z_count();
  return s;
}

TripletResult evaluate_triplet(const Graph& g, const DodagTree& tree, const Triplet& t) {
  TripletResult r;
  r.x = summarize_x_triplet(g, t);
  r.dodag = summarize(dodag_x(tree.tree_graph, tree, PartySet{{t.a, t.b, t.c}}));
  return r;
}

PairResult evaluate_pair(const Graph& g, const Pair& p) {
  return {summarize(x_protocol_pair(g, p.a, p.b)), summarize(repeater_protocol(g, p.a, p.b))};
}

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

}  // namespace

std::vector<Triplet> all_triplets(const Graph& g) {
  const std::vector<VertexId> v = g.active().to_vector();
  std::vector<Triplet> out;
  const std::size_t n = v.size();
  if (n >= 3) out.reserve(n * (n - 1) * (n - 2) / 6);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) out.push_back({v[i], v[j], v[k]});
  return out;
}

std::vector<Triplet> sample_triplets(const Graph& g, std::size_t count, std::uint64_t seed) {
  const std::vector<VertexId> v = g.active().to_vector();
  const std::size_t n = v.size();
  const std::size_t total = n >= 3 ? n * (n - 1) * (n - 2) / 6 : 0;
  if (count >= total) return all_triplets(g);

  Rng rng(seed);
  std::set<std::tuple<VertexId, VertexId, VertexId>> chosen;
  while (chosen.size() < count) {
    std::array<VertexId, 3> t{};
    t[0] = v[rng.below(n)];
    do t[1] = v[rng.below(n)];
    while (t[1] == t[0]);
    do t[2] = v[rng.below(n)];
    while (t[2] == t[0] || t[2] == t[1]);
    std::sort(t.begin(), t.end());
    chosen.emplace(t[0], t[1], t[2]);
  }
  std::vector<Triplet> out;
  out.reserve(count);
  for (const auto& [a, b, c] : chosen) out.push_back({a, b, c});
  return out;
}

std::vector<Pair> all_pairs(const Graph& g) {
  const std::vector<VertexId> v = g.active().to_vector();
  std::vector<Pair> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) out.push_back({v[i], v[j]});
  return out;
}

RunSummary summarize_x_triplet(const Graph& g, const Triplet& t) {
  try {
    return summarize(x_protocol_triplet(g, t.a, t.b, t.c));
  } catch (const RoutingFailedError& e) {
    return summarize_partial(e.partial_log());
  }
}

std::vector<TripletResult> evaluate_triplets_serial(const Graph& g, const DodagTree& tree,
                                                    const std::vector<Triplet>& triplets) {
  std::vector<TripletResult> out(triplets.size());
  for (std::size_t i = 0; i < triplets.size(); ++i) out[i] = evaluate_triplet(g, tree, triplets[i]);
  return out;
}

std::vector<TripletResult> evaluate_triplets_parallel(const Graph& g, const DodagTree& tree,
                                                      const std::vector<Triplet>& triplets, int threads) {
  std::vector<TripletResult> out(triplets.size());
  const auto count = static_cast<std::ptrdiff_t>(triplets.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(resolve_threads(threads))
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = evaluate_triplet(g, tree, triplets[i]);
  return out;
}

std::vector<PairResult> evaluate_pairs_serial(const Graph& g, const std::vector<Pair>& pairs) {
  std::vector<PairResult> out(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) out[i] = evaluate_pair(g, pairs[i]);
  return out;
}

std::vector<PairResult> evaluate_pairs_parallel(const Graph& g, const std::vector<Pair>& pairs, int threads) {
  std::vector<PairResult> out(pairs.size());
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(resolve_threads(threads))
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = evaluate_pair(g, pairs[i]);
  return out;
}

}  // namespace dodagx
