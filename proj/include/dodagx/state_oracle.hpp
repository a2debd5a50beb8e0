#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <set>
#include <vector>

#include "dodagx/graph.hpp"
#include "dodagx/measurement.hpp"

// Dense state-vector reference for graph states and projective Pauli
// measurements. Only meant for desk-scale validation of the rewrite rules.
//
// Qubit convention: the k-th active vertex (ascending id) is bit k of the
// amplitude index. For a graph with every vertex active, vertex k is bit k.
namespace dodagx::oracle {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxStateQubits = 12;
inline constexpr std::size_t kMaxOrbitVertices = 8;
inline constexpr std::size_t kMaxVerifyVertices = 8;

class StateVector {
 public:
  StateVector() = default;
  StateVector(std::size_t qubits, std::vector<Amplitude> amplitudes);

  std::size_t qubits() const { return qubits_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  Amplitude operator[](std::size_t i) const { return amps_[i]; }
  double norm() const;

 private:
  std::size_t qubits_ = 0;
  std::vector<Amplitude> amps_;
};

/// |G> = prod CZ_{uv} |+>^n. Throws CapacityError above kMaxStateQubits.
StateVector build_graph_state(const Graph& g);

struct Projection {
  StateVector state;  ///< normalized post-measurement state, all qubits kept
  double probability = 0.0;
};

/// Projects qubit q onto the +1 or -1 eigenspace of X or Z.
/// Throws DomainError if the outcome has probability <= 1e-12.
Projection project_pauli(const StateVector& s, std::size_t q, PauliBasis basis, int outcome);

/// Contracts qubit q (already projected to the given eigenstate) out of the
/// register and renormalizes; the result has one qubit fewer.
StateVector discard_qubit(const StateVector& s, std::size_t q, PauliBasis basis, int outcome);

/// Largest deviation || K_v |s> - |s> ||_inf over the generators
/// K_v = X_v prod_{u in N_v} Z_u of g.
double stabilizer_residual(const StateVector& s, const Graph& g);

/// Canonical forms (sorted edge lists) of every graph reachable from g by
/// local complementations. Throws CapacityError above kMaxOrbitVertices.
std::set<std::vector<Edge>> lc_orbit(const Graph& g);

/// True when h is in the local-complementation orbit of g.
bool same_lc_orbit(const Graph& g, const Graph& h);

/// The 24 single-qubit Clifford unitaries, one representative per phase class.
const std::vector<std::array<Amplitude, 4>>& single_qubit_cliffords();

/// |psi> == (U_1 x ... x U_k)|h> up to global phase for some single-qubit
/// Cliffords U_q, searched exhaustively over all 24^k products.
bool lc_equivalent_by_search(const StateVector& psi, const Graph& h);

/// Same relation decided from stabilizer groups: psi must be a stabilizer
/// state whose unsigned stabilizer group is the image of h's under a
/// per-qubit permutation of {X, Y, Z}.
bool lc_equivalent_by_stabilizers(const StateVector& psi, const Graph& h);

/// Dispatches to the exhaustive search for <= 4 qubits, the stabilizer test above.
bool lc_equivalent(const StateVector& psi, const Graph& h);

/// Checks that, for every outcome of m with nonzero probability, the
/// measured state on the remaining qubits is local-Clifford equivalent to
/// the graph state of `claimed`.
bool verify_measurement_claim(const Graph& g, const Measurement& m, const Graph& claimed);

/// verify_measurement_claim against the rewrite-rule result of m on g.
bool verify_measurement_rule(const Graph& g, const Measurement& m);

}  // namespace dodagx::oracle
