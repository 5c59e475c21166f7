#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "treeqaoa/model.hpp"
#include "treeqaoa/tree_engine.hpp"

// Multi-start Nelder-Mead minimization of the asymptotic energy density over
// the 2p angles, with finite-difference stationarity checks.

namespace treeqaoa {

struct OptimizationConfig {
  int restarts = 0;  // 0 = per-depth default (32 for p <= 3, 64 above)
  int max_iterations = 4000;
  double simplex_tolerance = 1e-12;
  std::uint64_t seed = 1;
  std::optional<AngleSchedule> warm_start;
  std::vector<std::pair<double, double>> search_box;  // empty = default box

  int effective_restarts(int p) const { return restarts > 0 ? restarts : (p <= 3 ? 32 : 64); }
  void validate(int p) const;
};

struct OptimizationResult {
  AngleSchedule best_angles;
  double best_energy = 0.0;
  int restarts_converged = 0;  // restarts that met simplex_tolerance
  double gradient_norm_estimate = 0.0;
};

// default box: gamma in (0, pi sqrt(d)/2), beta in (-pi/2, pi/2)
std::vector<std::pair<double, double>> default_search_box(int d, int p);

// central finite-difference gradient of the energy density (step 1e-5)
std::vector<double> fd_gradient(const TreeProblem& problem, const AngleSchedule& angles,
                                double step = 1e-5);
double fd_gradient_norm(const TreeProblem& problem, const AngleSchedule& angles,
                        double step = 1e-5);

OptimizationResult optimize(const TreeProblem& problem, const OptimizationConfig& config);

// optimize p = 1..p_max, warm-starting each depth from the previous optimum
// (zero-padded and interpolated); energies are non-increasing in p
std::vector<OptimizationResult> warm_start_ladder(const TreeProblem& problem, int p_max,
                                                  const OptimizationConfig& config);

// one optimization per grid point, warm-started from the previous point
std::vector<std::pair<double, OptimizationResult>> sweep_field(
    int d, int p, const std::vector<double>& h_grid, const OptimizationConfig& config);

}  // namespace treeqaoa
