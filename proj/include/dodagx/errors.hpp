#pragma once

#include <stdexcept>
#include <string>

namespace dodagx {

/// Precondition violated: inactive vertex, disconnected graph, bad parameter.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No path exists between the requested endpoints.
class NoPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An X measurement was requested with a witness outside N(target).
class WitnessNotNeighborError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input exceeds a size limit (state-vector oracle, orbit enumeration).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A topology generator exhausted its retries.
class GenerationFailedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dodagx
