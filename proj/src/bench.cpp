#include "dodagx/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

#include "dodagx/dodag.hpp"
#include "dodagx/rng.hpp"
#include "dodagx/sweep_kernels.hpp"
#include "dodagx/topology.hpp"

namespace dodagx::bench {
namespace {

/// Accumulates per-cell sums from the records it forwards to the sink.
class Collector {
 public:
  Collector(const SweepOptions& options, std::vector<std::string> protocols)
      : options_(options), protocols_(std::move(protocols)) {}

  void emit(const BenchmarkRecord& r) {
    if (options_.sink) options_.sink(r);
    const auto rank = static_cast<std::size_t>(
        std::find(protocols_.begin(), protocols_.end(), r.protocol) - protocols_.begin());
    AggregateCell& cell = cells_[{r.cell, rank}];
    cell.cell = r.cell;
    cell.protocol = r.protocol;
    cell.sum_total += r.total();
    ++cell.samples;
  }

  void generation_failed() { ++result_.failed_generations; }
  void tree_run_failed() { ++result_.unsuccessful_tree_runs; }

  /// Diffs use protocols_[0] as the baseline mp and protocols_[1] as me.
  SweepResult finish() && {
    for (auto& [key, cell] : cells_) result_.aggregates.push_back(cell);
    for (const AggregateCell& cell : result_.aggregates) {
      if (cell.protocol != protocols_[0]) continue;
      const AggregateCell* other = result_.find(cell.cell, protocols_[1]);
      if (other == nullptr) continue;
      result_.diffs.push_back({cell.cell, percent_difference(cell.mean_total(), other->mean_total())});
    }
    return std::move(result_);
  }

 private:
  const SweepOptions& options_;
  std::vector<std::string> protocols_;
  std::map<std::pair<CellKey, std::size_t>, AggregateCell> cells_;
  SweepResult result_;
};

BenchmarkRecord make_record(const CellKey& cell, std::optional<std::uint64_t> seed, const std::string& protocol,
                            const RunSummary& run) {
  BenchmarkRecord r;
  r.cell = cell;
  r.seed = seed;
  r.protocol = protocol;
  r.x_count = run.counts.x_count();
  r.z_count = run.counts.z_count();
  r.success = run.success;
  return r;
}

void run_triplet_instance(const Graph& g, const CellKey& cell, std::optional<std::uint64_t> seed,
                          std::uint64_t sample_seed, const SweepOptions& options, Collector& out) {
  const DodagTree tree = build_dodag(g);
  const bool sample = options.sample_size && g.active_count() > kSampleThreshold;
  const std::vector<Triplet> triplets = sample ? sample_triplets(g, *options.sample_size, sample_seed) : all_triplets(g);
  const std::vector<TripletResult> results = options.parallel
                                                 ? evaluate_triplets_parallel(g, tree, triplets, options.threads)
                                                 : evaluate_triplets_serial(g, tree, triplets);
  for (std::size_t i = 0; i < triplets.size(); ++i) {
    const Triplet& t = triplets[i];
    for (const auto& [protocol, run] : {std::pair{&kProtocolX, &results[i].x},
                                        std::pair{&kProtocolDodagX, &results[i].dodag}}) {
      BenchmarkRecord r = make_record(cell, seed, *protocol, *run);
      r.a = t.a;
      r.b = t.b;
      r.c = t.c;
      out.emit(r);
    }
    if (!results[i].dodag.success) out.tree_run_failed();
  }
}

void run_pair_instance(const Graph& g, const CellKey& cell, std::optional<std::uint64_t> seed,
                       const SweepOptions& options, Collector& out) {
  const std::vector<Pair> pairs = all_pairs(g);
  const std::vector<PairResult> results =
      options.parallel ? evaluate_pairs_parallel(g, pairs, options.threads) : evaluate_pairs_serial(g, pairs);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (const auto& [protocol, run] : {std::pair{&kProtocolRepeater, &results[i].repeater},
                                        std::pair{&kProtocolX, &results[i].x}}) {
      BenchmarkRecord r = make_record(cell, seed, *protocol, *run);
      r.a = pairs[i].a;
      r.b = pairs[i].b;
      out.emit(r);
    }
  }
}

CellKey smallworld_cell(std::size_t n, std::size_t k, double p) {
  CellKey key;
  key.topology = "smallworld";
  key.n = n;
  key.k = k;
  key.p = p;
  return key;
}

/// Runs `body(graph, seed)` for every replicate that generates successfully.
template <class Body>
void for_each_smallworld(std::size_t n, std::size_t k, double p, std::size_t seeds, const SweepOptions& options,
                         Collector& out, Body&& body) {
  for (std::size_t rep = 0; rep < seeds; ++rep) {
    const std::uint64_t seed = cell_seed(options.master_seed, n, k, p, rep);
    Graph g;
    try {
      g = topology::generate(topology::SmallWorld{n, k, p, seed});
    } catch (const GenerationFailedError&) {
      out.generation_failed();
      continue;
    }
    body(g, seed);
  }
}

void triplet_smallworld_cell(std::size_t n, std::size_t k, double p, std::size_t seeds, const SweepOptions& options,
                             Collector& out) {
  const CellKey cell = smallworld_cell(n, k, p);
  for_each_smallworld(n, k, p, seeds, options, out, [&](const Graph& g, std::uint64_t seed) {
    run_triplet_instance(g, cell, seed, derive_seed(seed, {3}), options, out);
  });
}

}  // namespace

double percent_difference(double mp, double me) {
  if (!(mp > 0.0)) throw DomainError("percent difference needs a positive baseline mean");
  return (mp - me) / mp * 100.0;
}

const AggregateCell* SweepResult::find(const CellKey& cell, const std::string& protocol) const {
  for (const AggregateCell& a : aggregates)
    if (a.cell == cell && a.protocol == protocol) return &a;
  return nullptr;
}

const DiffCell* SweepResult::find_diff(const CellKey& cell) const {
  for (const DiffCell& d : diffs)
    if (d.cell == cell) return &d;
  return nullptr;
}

std::uint64_t cell_seed(std::uint64_t master, std::size_t n, std::size_t k, double p, std::size_t replicate) {
  const auto p_micro = static_cast<std::uint64_t>(std::llround(p * 1e6));
  return derive_seed(master, {n, k, p_micro, replicate});
}

SweepResult run_grid_sweep(const GridSweepConfig& config, const SweepOptions& options) {
  Collector out(options, {kProtocolX, kProtocolDodagX});
  for (std::size_t m = config.min_rows; m <= config.max_rows; ++m)
    for (std::size_t l = config.min_cols; l <= config.max_cols; ++l) {
      CellKey cell;
      cell.topology = "grid";
      cell.rows = m;
      cell.cols = l;
      cell.n = m * l;
      const Graph g = topology::generate(topology::Grid{m, l});
      run_triplet_instance(g, cell, std::nullopt, derive_seed(options.master_seed, {m, l}), options, out);
    }
  return std::move(out).finish();
}

SweepResult run_smallworld_sweep(const SmallWorldSweepConfig& config, const SweepOptions& options) {
  if (config.seeds < 1) throw DomainError("small-world sweep needs at least one seed");
  Collector out(options, {kProtocolX, kProtocolDodagX});
  for (const std::size_t k : config.k_values)
    for (const double p : config.p_values) triplet_smallworld_cell(config.n, k, p, config.seeds, options, out);
  return std::move(out).finish();
}

SweepResult run_fixed_k_scan(const FixedKConfig& config, const SweepOptions& options) {
  if (config.seeds < 1) throw DomainError("fixed-k scan needs at least one seed");
  Collector out(options, {kProtocolX, kProtocolDodagX});
  for (const std::size_t n : config.n_values)
    for (const double p : config.p_values) triplet_smallworld_cell(n, config.k, p, config.seeds, options, out);
  return std::move(out).finish();
}

SweepResult run_repeater_comparison(const RepeaterConfig& config, const SweepOptions& options) {
  for (const std::string& f : config.families)
    if (f != "grid" && f != "star" && f != "smallworld") throw DomainError("unknown repeater family '" + f + "'");
  const auto wants = [&](const std::string& f) {
    return std::find(config.families.begin(), config.families.end(), f) != config.families.end();
  };

  Collector out(options, {kProtocolRepeater, kProtocolX});
  if (wants("grid"))
    for (const std::size_t side : config.grid_sides) {
      CellKey cell;
      cell.topology = "grid";
      cell.rows = side;
      cell.cols = side;
      cell.n = side * side;
      run_pair_instance(topology::generate(topology::Grid{side, side}), cell, std::nullopt, options, out);
    }
  if (wants("smallworld")) {
    if (config.seeds < 1) throw DomainError("repeater comparison needs at least one seed");
    for (const std::size_t n : config.smallworld_sizes)
      for (const std::size_t k : config.k_values)
        for (const double p : config.p_values) {
          const CellKey cell = smallworld_cell(n, k, p);
          for_each_smallworld(n, k, p, config.seeds, options, out, [&](const Graph& g, std::uint64_t seed) {
            run_pair_instance(g, cell, seed, options, out);
          });
        }
  }
  if (wants("star"))
    for (const std::size_t n : config.star_sizes) {
      CellKey cell;
      cell.topology = "star";
      cell.n = n;
      run_pair_instance(topology::generate(topology::Star{n}), cell, std::nullopt, options, out);
    }
  return std::move(out).finish();
}

std::string format_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

namespace {

template <class T>
std::string optional_field(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string key_fields(const CellKey& c) {
  return c.topology + ',' + optional_field(c.rows) + ',' + optional_field(c.cols) + ',' + std::to_string(c.n) + ',' +
         optional_field(c.k) + ',' + (c.p ? format_decimal(*c.p) : std::string());
}

}  // namespace

std::string raw_csv_line(const BenchmarkRecord& r) {
  return key_fields(r.cell) + ',' + optional_field(r.seed) + ',' + r.protocol + ',' + std::to_string(r.a) + ',' +
         std::to_string(r.b) + ',' + optional_field(r.c) + ',' + std::to_string(r.x_count) + ',' +
         std::to_string(r.z_count) + ',' + std::to_string(r.total()) + ',' + (r.success ? "true" : "false");
}

void write_aggregate_csv(std::ostream& os, const std::vector<AggregateCell>& cells) {
  os << kAggregateHeader << '\n';
  for (const AggregateCell& c : cells)
    os << key_fields(c.cell) << ',' << c.protocol << ',' << format_decimal(c.mean_total()) << ',' << c.samples
       << '\n';
}

void write_diff_csv(std::ostream& os, const std::vector<DiffCell>& cells) {
  os << kDiffHeader << '\n';
  for (const DiffCell& d : cells) os << key_fields(d.cell) << ',' << format_decimal(d.percent_difference) << '\n';
}

}  // namespace dodagx::bench
