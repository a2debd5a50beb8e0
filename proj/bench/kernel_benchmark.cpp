#include <benchmark/benchmark.h>

#include <memory>

#include "dodagx/dodag.hpp"
#include "dodagx/sweep_kernels.hpp"
#include "dodagx/topology.hpp"

using namespace dodagx;

namespace {

struct Workload {
  Graph g;
  DodagTree tree;
  std::vector<Triplet> triplets;
  std::vector<Pair> pairs;

  explicit Workload(std::size_t side)
      : g(topology::generate(topology::Grid{side, side})),
        tree(build_dodag(g)),
        triplets(all_triplets(g)),
        pairs(all_pairs(g)) {}
};

const Workload& workload(std::size_t side) {
  static std::vector<std::unique_ptr<Workload>> cache(16);
  if (!cache[side]) cache[side] = std::make_unique<Workload>(side);
  return *cache[side];
}

void BM_TripletsSerial(benchmark::State& state) {
  const Workload& w = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_triplets_serial(w.g, w.tree, w.triplets));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.triplets.size()));
}

void BM_TripletsParallel(benchmark::State& state) {
  const Workload& w = workload(static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_triplets_parallel(w.g, w.tree, w.triplets, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.triplets.size()));
}

void BM_PairsSerial(benchmark::State& state) {
  const Workload& w = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_pairs_serial(w.g, w.pairs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.pairs.size()));
}

void BM_PairsParallel(benchmark::State& state) {
  const Workload& w = workload(static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_pairs_parallel(w.g, w.pairs, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.pairs.size()));
}

}  // namespace

BENCHMARK(BM_TripletsSerial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TripletsParallel)->ArgsProduct({{5, 7}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PairsSerial)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairsParallel)->ArgsProduct({{9}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
