#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treeqaoa/graph.hpp"
#include "treeqaoa/model.hpp"

// Fixed-angle finite-size protocol: run tree angles unchanged on sampled
// random regular instances and compare exact QAOA expectations against
// brute force and the classical baselines.

namespace treeqaoa {

struct InstanceRow {
  std::uint64_t seed = 0;
  double qaoa_cut_fraction = 0.0;   // exact expectation, edges cut / M
  double qaoa_cut_edges = 0.0;
  double qaoa_independence = 0.0;   // exact E[r(z)] per vertex at lambda = 1
  std::optional<double> optimum;    // brute force: cut fraction or |MIS|/n
  std::optional<double> baseline;   // gw avg cut fraction or greedy |IS|/n
  std::optional<double> baseline_best;  // gw best cut fraction
};

struct Aggregate {
  double mean = 0.0;
  double sem = 0.0;  // standard error of the mean; plots band 3*sem
  int count = 0;
};

Aggregate aggregate(const std::vector<double>& values);

struct ExperimentReport {
  ProblemKind kind = ProblemKind::maxcut;
  int d = 0, p = 0, n = 0, instances = 0;
  std::uint64_t seed = 0;
  int gw_roundings = 0;
  AngleSchedule angles;
  std::vector<InstanceRow> rows;
  Aggregate qaoa;                        // cut fraction (maxcut) or r (mis)
  Aggregate baseline;                    // same units as qaoa
  std::optional<Aggregate> optimum;      // present when n <= brute-force cap
  std::optional<Aggregate> qaoa_ratio;   // qaoa / optimum per instance
  std::optional<Aggregate> baseline_ratio;
};

// maxcut: h = 0, baseline gw; mis: h = d-2 (lambda = 1), baseline greedy
ExperimentReport fixed_angle_experiment(ProblemKind kind, int d, int p, int n, int n_instances,
                                        const AngleSchedule& angles, std::uint64_t seed,
                                        int gw_roundings = 100);

}  // namespace treeqaoa
