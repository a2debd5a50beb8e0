#pragma once

#include <cstdint>
#include <vector>

#include "dodagx/dodag.hpp"
#include "dodagx/graph.hpp"
#include "dodagx/protocols.hpp"

// Per-party-tuple evaluation loops used by the benchmark sweeps. Each kernel
// has a serial reference and an OpenMP version; both fill result slot i from
// input i, so their outputs are identical for any thread count.
namespace dodagx {

struct Triplet {
  VertexId a = 0, b = 0, c = 0;
  friend bool operator==(const Triplet&, const Triplet&) = default;
};

struct Pair {
  VertexId a = 0, b = 0;
  friend bool operator==(const Pair&, const Pair&) = default;
};

/// Counts and success flag of one protocol run.
struct RunSummary {
  RoutingCounts counts;
  bool success = false;
  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

struct TripletResult {
  RunSummary x;      ///< x_protocol_triplet on the physical graph
  RunSummary dodag;  ///< dodag_x on the DODAG tree
  friend bool operator==(const TripletResult&, const TripletResult&) = default;
};

struct PairResult {
  RunSummary x;         ///< x_protocol_pair
  RunSummary repeater;  ///< repeater_protocol
  friend bool operator==(const PairResult&, const PairResult&) = default;
};

/// All a < b < c over the active vertices, lexicographic.
std::vector<Triplet> all_triplets(const Graph& g);

/// `count` distinct triplets (a < b < c) drawn uniformly from the active
/// vertices, sorted lexicographically. Returns all_triplets when count
/// is at least C(active, 3).
std::vector<Triplet> sample_triplets(const Graph& g, std::size_t count, std::uint64_t seed);

/// All a < b over the active vertices, lexicographic.
std::vector<Pair> all_pairs(const Graph& g);

/// An X-protocol triplet run that finds no route counts as unsuccessful,
/// with the measurements applied up to the failure.
RunSummary summarize_x_triplet(const Graph& g, const Triplet& t);

std::vector<TripletResult> evaluate_triplets_serial(const Graph& g, const DodagTree& tree,
                                                    const std::vector<Triplet>& triplets);
/// threads <= 0 uses the OpenMP default.
std::vector<TripletResult> evaluate_triplets_parallel(const Graph& g, const DodagTree& tree,
                                                      const std::vector<Triplet>& triplets, int threads = 0);

std::vector<PairResult> evaluate_pairs_serial(const Graph& g, const std::vector<Pair>& pairs);
std::vector<PairResult> evaluate_pairs_parallel(const Graph& g, const std::vector<Pair>& pairs, int threads = 0);

}  // namespace dodagx
