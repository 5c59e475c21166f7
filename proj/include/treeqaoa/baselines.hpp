#pragma once

#include <cstdint>

#include "treeqaoa/graph.hpp"

// Classical reference algorithms the QAOA curves are compared against.

namespace treeqaoa {

struct GwResult {
  double avg_cut = 0.0;  // mean cut over the hyperplane roundings
  int best_cut = 0;
  BitVector best_bits;
  bool relaxation_converged = false;
  int iterations = 0;
  std::vector<double> embedding;  // row-major n x rank unit vectors at termination
  int rank = 0;
};

// rank-ceil(sqrt(2n)) relaxation of MaxCut solved by projected gradient
// ascent on unit vertex vectors, then `roundings` random-hyperplane cuts
GwResult gw_maxcut(const GraphInstance& graph, int roundings, std::uint64_t seed);

// repeatedly add a uniformly random minimum-degree vertex of the residual
// graph and delete its neighbors; isolated vertices all end up selected
BitVector greedy_mis(const GraphInstance& graph, std::uint64_t seed);

// expected cut fraction of uniform sampling (p=0 QAOA), exactly 1/2
double random_sampling_baseline(const GraphInstance& graph);

}  // namespace treeqaoa
