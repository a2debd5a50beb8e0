#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dodagx/graph.hpp"

// Benchmark sweeps: both protocols over every party tuple of each network,
// aggregated into per-cell means and percent differences.
namespace dodagx::bench {

inline const std::string kProtocolDodagX = "dodag-x";
inline const std::string kProtocolX = "x";
inline const std::string kProtocolRepeater = "repeater";
inline const std::string kProtocolNParty = "nparty";

/// Topology parameters identifying one sweep cell. Fields that do not apply
/// to the family are empty.
struct CellKey {
  std::string topology;
  std::optional<std::size_t> rows;
  std::optional<std::size_t> cols;
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::optional<double> p;

  friend bool operator==(const CellKey&, const CellKey&) = default;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

struct BenchmarkRecord {
  CellKey cell;
  std::optional<std::uint64_t> seed;  ///< generator seed of random topologies
  std::string protocol;
  VertexId a = 0;
  VertexId b = 0;
  std::optional<VertexId> c;
  std::size_t x_count = 0;
  std::size_t z_count = 0;
  bool success = false;

  std::size_t total() const { return x_count + z_count; }
};

struct AggregateCell {
  CellKey cell;
  std::string protocol;
  std::uint64_t sum_total = 0;
  std::size_t samples = 0;

  double mean_total() const { return static_cast<double>(sum_total) / static_cast<double>(samples); }
};

struct DiffCell {
  CellKey cell;
  double percent_difference = 0.0;
};

/// (mp - me) / mp * 100. Positive means the second protocol needs fewer
/// measurements. Throws DomainError unless mp > 0.
double percent_difference(double mp, double me);

using RecordSink = std::function<void(const BenchmarkRecord&)>;

struct SweepOptions {
  std::uint64_t master_seed = 0;
  int threads = 0;        ///< <= 0: OpenMP default
  bool parallel = true;   ///< false runs the serial reference kernels
  /// When set, networks with more than kSampleThreshold vertices evaluate
  /// this many random triplets instead of all of them.
  std::optional<std::size_t> sample_size;
  /// Receives every raw record in emission order; may be empty.
  RecordSink sink;
};

inline constexpr std::size_t kSampleThreshold = 40;
inline constexpr std::size_t kDefaultSampleSize = 5000;

struct SweepResult {
  /// Sorted by cell, then protocol in emission order.
  std::vector<AggregateCell> aggregates;
  /// One entry per cell where both protocols have samples.
  std::vector<DiffCell> diffs;
  std::size_t failed_generations = 0;
  /// Tree-protocol runs (DODAG-X) that did not end isolated and connected.
  std::size_t unsuccessful_tree_runs = 0;

  /// Aggregate for (cell, protocol); nullptr when absent.
  const AggregateCell* find(const CellKey& cell, const std::string& protocol) const;
  const DiffCell* find_diff(const CellKey& cell) const;
};

struct GridSweepConfig {
  std::size_t min_rows = 2, max_rows = 9;
  std::size_t min_cols = 2, max_cols = 9;
};

struct SmallWorldSweepConfig {
  std::size_t n = 30;
  std::vector<std::size_t> k_values{2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24};
  std::vector<double> p_values{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::size_t seeds = 20;
};

struct FixedKConfig {
  std::size_t k = 9;
  std::vector<std::size_t> n_values{10, 20, 30, 40, 50, 60};
  std::vector<double> p_values{0.0, 0.1, 0.3, 0.5, 0.7, 1.0};
  std::size_t seeds = 5;
};

struct RepeaterConfig {
  std::vector<std::string> families{"grid", "star", "smallworld"};
  std::vector<std::size_t> grid_sides{2, 3, 4, 5, 6, 7, 8, 9};
  std::vector<std::size_t> star_sizes{3, 5, 10, 20, 40, 80};
  std::vector<std::size_t> smallworld_sizes{10, 20, 30, 40, 50, 60};
  std::vector<std::size_t> k_values{4};
  std::vector<double> p_values{0.5};
  std::size_t seeds = 5;
};

/// DODAG-X (on the network's DODAG) against the X-protocol (on the network)
/// for every triplet of every m x l grid. Diff: mp = X-protocol.
SweepResult run_grid_sweep(const GridSweepConfig& config, const SweepOptions& options);

/// Same comparison on Watts-Strogatz graphs, pooled over seeds per (k, p).
SweepResult run_smallworld_sweep(const SmallWorldSweepConfig& config, const SweepOptions& options);

/// Same comparison at fixed k over network sizes and rewiring probabilities.
SweepResult run_fixed_k_scan(const FixedKConfig& config, const SweepOptions& options);

/// Two-party X-protocol against the repeater protocol over all pairs.
/// Diff: mp = repeater, so positive means the X-protocol is cheaper.
SweepResult run_repeater_comparison(const RepeaterConfig& config, const SweepOptions& options);

/// Seed of replicate `replicate` of a random topology cell.
std::uint64_t cell_seed(std::uint64_t master, std::size_t n, std::size_t k, double p, std::size_t replicate);

inline const std::string kRawHeader = "topology,rows,cols,n,k,p,seed,protocol,a,b,c,x_count,z_count,total,success";
inline const std::string kAggregateHeader = "topology,rows,cols,n,k,p,protocol,mean_total,samples";
inline const std::string kDiffHeader = "topology,rows,cols,n,k,p,percent_difference";

/// Fixed-point with six decimals.
std::string format_decimal(double value);

std::string raw_csv_line(const BenchmarkRecord& r);
void write_aggregate_csv(std::ostream& os, const std::vector<AggregateCell>& cells);
void write_diff_csv(std::ostream& os, const std::vector<DiffCell>& cells);

}  // namespace dodagx::bench
