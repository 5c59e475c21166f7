#pragma once

#include <complex>
#include <vector>

#include "treeqaoa/graph.hpp"
#include "treeqaoa/model.hpp"

// Exact dense simulation of the QAOA circuit on finite instances, plus
// brute-force optima.  This is the oracle the contraction backends are
// validated against on explicit tree graphs.

namespace treeqaoa {

inline constexpr int kQubitCap = 26;      // dense amplitudes, ~1 GiB at cap
inline constexpr int kBruteForceCap = 24;

struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amplitudes;  // basis index bit i = vertex i, bit set = spin -1

  double norm() const;
};

// p alternating layers e^{-i beta B} e^{-i gamma H} on |+>, with
// H = (1/sqrt(d_norm)) (sum_{ij in E} Z_i Z_j + h sum_i Z_i)
StateVector qaoa_state(const GraphInstance& graph, double h, int d_norm,
                       const AngleSchedule& angles);

// <Z_u Z_v> for one edge and <Z_u> for one vertex
double edge_zz(const StateVector& state, int u, int v);
double vertex_z(const StateVector& state, int u);

struct Expectations {
  double mean_zz_per_edge = 0.0;
  double mean_z_per_vertex = 0.0;
  double energy = 0.0;                     // of the normalized Hamiltonian
  double exp_cut_fraction = 0.0;
  double exp_independence_objective = 0.0; // E[r(z)] at lambda = 1, per vertex
};

Expectations expectations(const StateVector& state, const GraphInstance& graph, double h,
                          int d_norm);

struct BruteForceResult {
  double value = 0.0;   // max cut edge count or max independent set size
  BitVector witness;
};

BruteForceResult brute_force(const GraphInstance& graph, ProblemKind objective);

}  // namespace treeqaoa
