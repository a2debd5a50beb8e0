#include "dodagx/state_oracle.hpp"

#include <bit>
#include <cmath>
#include <deque>
#include <string>

namespace dodagx::oracle {
namespace {

constexpr double kProbabilityFloor = 1e-12;
constexpr double kOverlapTolerance = 1e-9;

using Matrix2 = std::array<Amplitude, 4>;

std::vector<VertexId> qubit_vertices(const Graph& g) { return g.active().to_vector(); }

/// Local qubit index of every active vertex; -1 for inactive ones.
std::vector<int> local_index(const Graph& g) {
  std::vector<int> idx(g.order(), -1);
  int k = 0;
  g.active().for_each([&](VertexId v) { idx[v] = k++; });
  return idx;
}

void apply_1q(std::vector<Amplitude>& v, std::size_t q, const Matrix2& m) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j & bit) continue;
    const Amplitude a = v[j];
    const Amplitude b = v[j | bit];
    v[j] = m[0] * a + m[1] * b;
    v[j | bit] = m[2] * a + m[3] * b;
  }
}

Amplitude inner(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
  Amplitude acc{0.0, 0.0};
  for (std::size_t j = 0; j < a.size(); ++j) acc += std::conj(a[j]) * b[j];
  return acc;
}

Matrix2 mul(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Matrix2 strip_phase(Matrix2 m) {
  for (const auto& e : m) {
    if (std::abs(e) > 1e-9) {
      const Amplitude phase = std::conj(e) / std::abs(e);
      for (auto& x : m) x *= phase;
      break;
    }
  }
  return m;
}

bool same_matrix(const Matrix2& a, const Matrix2& b) {
  for (std::size_t i = 0; i < 4; ++i)
    if (std::abs(a[i] - b[i]) > 1e-9) return false;
  return true;
}

bool search_cliffords(const std::vector<Amplitude>& target, std::vector<std::vector<Amplitude>>& work,
                      std::size_t q, std::size_t k) {
  if (q == k) return std::abs(std::abs(inner(target, work[k])) - 1.0) < kOverlapTolerance;
  for (const auto& u : single_qubit_cliffords()) {
    work[q + 1] = work[q];
    apply_1q(work[q + 1], q, u);
    if (search_cliffords(target, work, q + 1, k)) return true;
  }
  return false;
}

// Pauli strings on k qubits are indexed by x | (z << k), phases ignored.
std::size_t pauli_index(std::size_t x, std::size_t z, std::size_t k) { return x | (z << k); }

/// Unsigned stabilizer group of psi as a membership table; empty when psi is
/// not a stabilizer state.
std::vector<bool> unsigned_stabilizers(const StateVector& psi) {
  const std::size_t k = psi.qubits();
  const std::size_t dim = std::size_t{1} << k;
  std::vector<bool> in_group(dim * dim, false);
  std::size_t members = 0;
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t z = 0; z < dim; ++z) {
      Amplitude acc{0.0, 0.0};
      for (std::size_t j = 0; j < dim; ++j) {
        const double sign = (std::popcount(j & z) % 2 == 0) ? 1.0 : -1.0;
        acc += std::conj(psi[j ^ x]) * sign * psi[j];
      }
      if (std::abs(acc) > 1.0 - 1e-8) {
        in_group[pauli_index(x, z, k)] = true;
        ++members;
      }
    }
  }
  if (members != dim) return {};
  return in_group;
}

// Single-qubit Paulis as (x, z) bit pairs: X = (1,0), Y = (1,1), Z = (0,1).
constexpr std::array<std::array<int, 2>, 3> kPaulis{{{1, 0}, {1, 1}, {0, 1}}};
constexpr std::array<std::array<int, 3>, 6> kPermutations{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

StateVector::StateVector(std::size_t qubits, std::vector<Amplitude> amplitudes)
    : qubits_(qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != (std::size_t{1} << qubits_))
    throw DomainError("amplitude count does not match qubit count");
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

StateVector build_graph_state(const Graph& g) {
  const std::size_t k = g.active_count();
  if (k > kMaxStateQubits)
    throw CapacityError("graph state oracle supports at most " + std::to_string(kMaxStateQubits) + " qubits");
  const auto idx = local_index(g);
  std::vector<std::pair<std::size_t, std::size_t>> cz;
  for (const auto& [u, v] : g.edges()) cz.emplace_back(idx[u], idx[v]);

  const std::size_t dim = std::size_t{1} << k;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<Amplitude> amps(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    int parity = 0;
    for (const auto& [a, b] : cz) parity ^= static_cast<int>(((j >> a) & 1U) & ((j >> b) & 1U));
    amps[j] = parity ? -amp : amp;
  }
  return StateVector(k, std::move(amps));
}

Projection project_pauli(const StateVector& s, std::size_t q, PauliBasis basis, int outcome) {
  if (q >= s.qubits()) throw DomainError("qubit index out of range");
  if (outcome != 1 && outcome != -1) throw DomainError("outcome must be +1 or -1");
  const std::size_t bit = std::size_t{1} << q;
  std::vector<Amplitude> out(s.amplitudes().size(), Amplitude{0.0, 0.0});
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (j & bit) continue;
    const Amplitude a0 = s[j];
    const Amplitude a1 = s[j | bit];
    if (basis == PauliBasis::Z) {
      if (outcome == 1)
        out[j] = a0;
      else
        out[j | bit] = a1;
    } else {
      // (I + outcome * X) / 2
      const Amplitude c = 0.5 * (a0 + static_cast<double>(outcome) * a1);
      out[j] = c;
      out[j | bit] = static_cast<double>(outcome) * c;
    }
  }
  double p = 0.0;
  for (const auto& a : out) p += std::norm(a);
  if (p <= kProbabilityFloor) throw DomainError("requested outcome has zero probability");
  const double scale = 1.0 / std::sqrt(p);
  for (auto& a : out) a *= scale;
  return {StateVector(s.qubits(), std::move(out)), p};
}

StateVector discard_qubit(const StateVector& s, std::size_t q, PauliBasis basis, int outcome) {
  if (q >= s.qubits()) throw DomainError("qubit index out of range");
  const std::size_t k = s.qubits() - 1;
  const std::size_t low_mask = (std::size_t{1} << q) - 1;
  std::vector<Amplitude> out(std::size_t{1} << k);
  for (std::size_t r = 0; r < out.size(); ++r) {
    const std::size_t j0 = (r & low_mask) | ((r & ~low_mask) << 1);
    const std::size_t j1 = j0 | (std::size_t{1} << q);
    if (basis == PauliBasis::Z)
      out[r] = outcome == 1 ? s[j0] : s[j1];
    else
      out[r] = (s[j0] + static_cast<double>(outcome) * s[j1]) / std::sqrt(2.0);
  }
  double nrm = 0.0;
  for (const auto& a : out) nrm += std::norm(a);
  if (nrm <= kProbabilityFloor) throw DomainError("qubit has no support on the requested eigenstate");
  const double scale = 1.0 / std::sqrt(nrm);
  for (auto& a : out) a *= scale;
  return StateVector(k, std::move(out));
}

double stabilizer_residual(const StateVector& s, const Graph& g) {
  const auto idx = local_index(g);
  double worst = 0.0;
  g.active().for_each([&](VertexId v) {
    const std::size_t x = std::size_t{1} << idx[v];
    std::size_t z = 0;
    g.row(v).for_each([&](VertexId u) { z |= std::size_t{1} << idx[u]; });
    for (std::size_t j = 0; j < s.amplitudes().size(); ++j) {
      // (X^x Z^z psi)[j ^ x] = (-1)^{|j & z|} psi[j]
      const double sign = (std::popcount(j & z) % 2 == 0) ? 1.0 : -1.0;
      worst = std::max(worst, std::abs(sign * s[j] - s[j ^ x]));
    }
  });
  return worst;
}

std::set<std::vector<Edge>> lc_orbit(const Graph& g) {
  if (g.active_count() > kMaxOrbitVertices)
    throw CapacityError("LC orbit enumeration supports at most " + std::to_string(kMaxOrbitVertices) +
                        " vertices");
  std::set<std::vector<Edge>> seen;
  std::deque<Graph> queue;
  seen.insert(g.edges());
  queue.push_back(g);
  const auto vertices = qubit_vertices(g);
  while (!queue.empty()) {
    const Graph cur = std::move(queue.front());
    queue.pop_front();
    for (const VertexId v : vertices) {
      Graph next = local_complement(cur, v);
      if (seen.insert(next.edges()).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

bool same_lc_orbit(const Graph& g, const Graph& h) {
  if (g.active() != h.active()) return false;
  return lc_orbit(g).count(h.edges()) > 0;
}

const std::vector<Matrix2>& single_qubit_cliffords() {
  static const std::vector<Matrix2> group = [] {
    const double r = 1.0 / std::sqrt(2.0);
    const Matrix2 h{Amplitude{r, 0}, Amplitude{r, 0}, Amplitude{r, 0}, Amplitude{-r, 0}};
    const Matrix2 s{Amplitude{1, 0}, Amplitude{0, 0}, Amplitude{0, 0}, Amplitude{0, 1}};
    std::vector<Matrix2> found{Matrix2{Amplitude{1, 0}, Amplitude{0, 0}, Amplitude{0, 0}, Amplitude{1, 0}}};
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (const auto& gen : {h, s}) {
        const Matrix2 next = strip_phase(mul(gen, found[i]));
        bool known = false;
        for (const auto& f : found) known = known || same_matrix(f, next);
        if (!known) found.push_back(next);
      }
    }
    return found;
  }();
  return group;
}

bool lc_equivalent_by_search(const StateVector& psi, const Graph& h) {
  const StateVector target = build_graph_state(h);
  if (target.qubits() != psi.qubits()) return false;
  const std::size_t k = psi.qubits();
  std::vector<std::vector<Amplitude>> work(k + 1);
  work[0] = psi.amplitudes();
  return search_cliffords(target.amplitudes(), work, 0, k);
}

bool lc_equivalent_by_stabilizers(const StateVector& psi, const Graph& h) {
  const std::size_t k = psi.qubits();
  if (h.active_count() != k) return false;
  if (k == 0) return true;
  const auto group = unsigned_stabilizers(psi);
  if (group.empty()) return false;

  // Generators of h as per-qubit Pauli kinds (-1 = identity).
  const auto idx = local_index(h);
  std::vector<std::vector<int>> generators;
  h.active().for_each([&](VertexId v) {
    std::vector<int> kinds(k, -1);
    kinds[idx[v]] = 0;
    h.row(v).for_each([&](VertexId u) { kinds[idx[u]] = 2; });
    generators.push_back(std::move(kinds));
  });

  std::vector<std::size_t> choice(k, 0);
  while (true) {
    bool all_in = true;
    for (const auto& gen : generators) {
      std::size_t x = 0, z = 0;
      for (std::size_t q = 0; q < k; ++q) {
        if (gen[q] < 0) continue;
        const auto& p = kPaulis[static_cast<std::size_t>(kPermutations[choice[q]][static_cast<std::size_t>(gen[q])])];
        x |= static_cast<std::size_t>(p[0]) << q;
        z |= static_cast<std::size_t>(p[1]) << q;
      }
      if (!group[pauli_index(x, z, k)]) {
        all_in = false;
        break;
      }
    }
    if (all_in) return true;
    std::size_t q = 0;
    while (q < k && ++choice[q] == kPermutations.size()) choice[q++] = 0;
    if (q == k) return false;
  }
}

bool lc_equivalent(const StateVector& psi, const Graph& h) {
  if (psi.qubits() <= 4) return lc_equivalent_by_search(psi, h);
  return lc_equivalent_by_stabilizers(psi, h);
}

bool verify_measurement_claim(const Graph& g, const Measurement& m, const Graph& claimed) {
  if (g.active_count() > kMaxVerifyVertices)
    throw CapacityError("measurement verification supports at most " + std::to_string(kMaxVerifyVertices) +
                        " vertices");
  g.require_active(m.target);
  if (claimed.is_active(m.target) || claimed.active_count() + 1 != g.active_count()) return false;

  const StateVector state = build_graph_state(g);
  const auto idx = local_index(g);
  const auto q = static_cast<std::size_t>(idx[m.target]);
  for (const int outcome : {1, -1}) {
    Projection proj;
    try {
      proj = project_pauli(state, q, m.kind, outcome);
    } catch (const DomainError&) {
      continue;  // outcome never occurs
    }
    const StateVector rest = discard_qubit(proj.state, q, m.kind, outcome);
    if (!lc_equivalent(rest, claimed)) return false;
  }
  return true;
}

bool verify_measurement_rule(const Graph& g, const Measurement& m) {
  Graph result = g;
  apply(result, m);
  return verify_measurement_claim(g, m, result);
}

}  // namespace dodagx::oracle
