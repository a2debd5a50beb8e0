#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dodagx/graph.hpp"

namespace dodagx::topology {

/// rows x cols lattice, row-major ids, 4-neighbor edges.
struct Grid {
  std::size_t rows = 1;
  std::size_t cols = 1;
};

inline constexpr int kMaxConnectAttempts = 100;

/// Watts-Strogatz: ring lattice joining each node to floor(k/2) neighbors per
/// side, then every lattice edge rewired with probability p.
struct SmallWorld {
  std::size_t n = 0;
  std::size_t k = 2;
  double p = 0.0;
  std::uint64_t seed = 0;
  int max_attempts = kMaxConnectAttempts;  ///< disconnected draws are retried
};

/// Center 0, leaves 1..n-1.
struct Star {
  std::size_t n = 2;
};

struct Ring {
  std::size_t n = 3;
};

/// Uniform labeled tree (Pruefer decoding).
struct RandomTree {
  std::size_t n = 1;
  std::uint64_t seed = 0;
};

using TopologySpec = std::variant<Grid, SmallWorld, Star, Ring, RandomTree>;

/// Throws DomainError on invalid parameters, GenerationFailedError when a
/// connected small-world graph is not found within max_attempts draws.
Graph generate(const TopologySpec& spec);

/// Throws DomainError describing the first violated parameter constraint.
void validate(const TopologySpec& spec);

std::string family_name(const TopologySpec& spec);

/// Families supported by the depth-scaling probe.
enum class DepthFamily { SquareGrid, LineGrid, SmallWorld };

struct DepthPoint {
  std::size_t n = 0;  ///< vertex count
  double mean_depth = 0.0;
};

/// Builds the DODAG (min-eccentricity root, BFS tree) for each size and
/// records its depth. `sizes` are side lengths for SquareGrid and vertex
/// counts otherwise; small-world depths are averaged over `seeds` graphs.
std::vector<DepthPoint> dodag_depth_scaling(DepthFamily family, const std::vector<std::size_t>& sizes,
                                            std::size_t k = 8, double p = 0.5, std::size_t seeds = 1,
                                            std::uint64_t master_seed = 0);

}  // namespace dodagx::topology
