#include "treeqaoa/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace treeqaoa {

namespace {

// diagonal of H = (1/sqrt(d)) (sum_{ij in E} Z_i Z_j + h sum_i Z_i) over the
// computational basis; basis index bit set = spin -1
std::vector<double> energy_table(const GraphInstance& graph, double h, int d_norm) {
  const std::size_t dim = std::size_t{1} << graph.n;
  const double inv_sd = 1.0 / std::sqrt(static_cast<double>(d_norm));
  std::vector<double> table(dim);
  detail::parallel_map(dim, [&](std::size_t s) {
    int zz = 0;
    for (const auto& [u, v] : graph.edges)
      zz += ((s >> u) ^ (s >> v)) & 1u ? -1 : +1;
    const int down = std::popcount(s & ((std::size_t{1} << graph.n) - 1));
    const int z = graph.n - 2 * down;  // sum of spins
    table[s] = inv_sd * (zz + h * z);
  });
  return table;
}

}  // namespace

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

StateVector qaoa_state(const GraphInstance& graph, double h, int d_norm,
                       const AngleSchedule& angles) {
  graph.validate();
  angles.validate();
  if (d_norm < 1) throw std::invalid_argument("qaoa_state: d_norm must be >= 1");
  if (graph.n < 1) throw std::invalid_argument("qaoa_state: empty graph");
  if (graph.n > kQubitCap)
    throw CapExceeded("qaoa_state: " + std::to_string(graph.n) + " qubits exceed the cap " +
                      std::to_string(kQubitCap));

  const std::size_t dim = std::size_t{1} << graph.n;
  const auto energies = energy_table(graph, h, d_norm);

  StateVector state;
  state.n = graph.n;
  state.amplitudes.assign(dim, std::complex<double>{std::pow(2.0, -graph.n / 2.0), 0.0});
  auto& amp = state.amplitudes;

  for (int layer = 0; layer < angles.depth(); ++layer) {
    const double gamma = angles.gammas[static_cast<std::size_t>(layer)];
    const double beta = angles.betas[static_cast<std::size_t>(layer)];
    detail::parallel_map(dim, [&](std::size_t s) {
      amp[s] *= std::exp(std::complex<double>{0.0, -gamma * energies[s]});
    });
    // e^{-i beta X} per qubit: [[cos b, -i sin b], [-i sin b, cos b]]
    const double c = std::cos(beta);
    const std::complex<double> is{0.0, -std::sin(beta)};
    for (int q = 0; q < graph.n; ++q) {
      const std::size_t bit = std::size_t{1} << q;
      detail::parallel_map(dim / 2, [&](std::size_t i) {
        // i enumerates states with qubit q clear
        const std::size_t s0 = (i & (bit - 1)) | ((i & ~(bit - 1)) << 1);
        const std::size_t s1 = s0 | bit;
        const auto a0 = amp[s0], a1 = amp[s1];
        amp[s0] = c * a0 + is * a1;
        amp[s1] = is * a0 + c * a1;
      });
    }
  }
  return state;
}

double edge_zz(const StateVector& state, int u, int v) {
  double zz = 0.0;
  for (std::size_t s = 0; s < state.amplitudes.size(); ++s) {
    const double pr = std::norm(state.amplitudes[s]);
    zz += (((s >> u) ^ (s >> v)) & 1u) ? -pr : pr;
  }
  return zz;
}

double vertex_z(const StateVector& state, int u) {
  double z = 0.0;
  for (std::size_t s = 0; s < state.amplitudes.size(); ++s) {
    const double pr = std::norm(state.amplitudes[s]);
    z += ((s >> u) & 1u) ? -pr : pr;
  }
  return z;
}

Expectations expectations(const StateVector& state, const GraphInstance& graph, double h,
                          int d_norm) {
  if (state.n != graph.n) throw std::invalid_argument("expectations: state/graph size mismatch");
  if (d_norm < 1) throw std::invalid_argument("expectations: d_norm must be >= 1");
  const std::size_t dim = std::size_t{1} << graph.n;
  if (state.amplitudes.size() != dim)
    throw std::invalid_argument("expectations: amplitude count mismatch");

  double sum_zz = 0.0;    // sum over edges of <Z_u Z_v>
  double sum_z = 0.0;     // sum over vertices of <Z_u>
  double sum_both = 0.0;  // expected # edges with both endpoints selected
  for (std::size_t s = 0; s < dim; ++s) {
    const double pr = std::norm(state.amplitudes[s]);
    if (pr == 0.0) continue;
    int zz = 0, both = 0;
    for (const auto& [u, v] : graph.edges) {
      const bool cut = ((s >> u) ^ (s >> v)) & 1u;
      zz += cut ? -1 : +1;
      // selected = spin +1 = bit clear
      both += !((s >> u) & 1u) && !((s >> v) & 1u);
    }
    const int down = std::popcount(s);
    sum_zz += pr * zz;
    sum_z += pr * (graph.n - 2 * down);
    sum_both += pr * both;
  }

  Expectations e;
  const int m = graph.m();
  e.mean_zz_per_edge = m > 0 ? sum_zz / m : 0.0;
  e.mean_z_per_vertex = graph.n > 0 ? sum_z / graph.n : 0.0;
  e.energy = (sum_zz + h * sum_z) / std::sqrt(static_cast<double>(d_norm));
  e.exp_cut_fraction = m > 0 ? (1.0 - e.mean_zz_per_edge) / 2.0 : 0.0;
  // E[r(z)] at lambda = 1: (# selected - # both-selected edges) / n
  const double exp_selected = (graph.n + sum_z) / 2.0;
  e.exp_independence_objective = graph.n > 0 ? (exp_selected - sum_both) / graph.n : 0.0;
  return e;
}

BruteForceResult brute_force(const GraphInstance& graph, ProblemKind objective) {
  graph.validate();
  if (graph.n > kBruteForceCap)
    throw CapExceeded("brute_force: n = " + std::to_string(graph.n) + " exceeds the cap " +
                      std::to_string(kBruteForceCap));
  const std::size_t dim = std::size_t{1} << graph.n;
  std::size_t best_mask = 0;
  int best = -1;
  for (std::size_t s = 0; s < dim; ++s) {
    int value = 0;
    if (objective == ProblemKind::maxcut) {
      for (const auto& [u, v] : graph.edges) value += ((s >> u) ^ (s >> v)) & 1u;
    } else {
      bool independent = true;
      for (const auto& [u, v] : graph.edges)
        if (((s >> u) & 1u) && ((s >> v) & 1u)) {
          independent = false;
          break;
        }
      if (!independent) continue;
      value = std::popcount(s);
    }
    if (value > best) {
      best = value;
      best_mask = s;
    }
  }
  BruteForceResult r;
  r.value = best;
  r.witness.assign(static_cast<std::size_t>(graph.n), 0);
  for (int v = 0; v < graph.n; ++v)
    r.witness[static_cast<std::size_t>(v)] = (best_mask >> v) & 1u;
  return r;
}

}  // namespace treeqaoa
