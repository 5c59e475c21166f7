#include "treeqaoa/experiment.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "treeqaoa/baselines.hpp"
#include "treeqaoa/rng.hpp"
#include "treeqaoa/statevector.hpp"

namespace treeqaoa {

Aggregate aggregate(const std::vector<double>& values) {
  Aggregate a;
  a.count = static_cast<int>(values.size());
  if (values.empty()) return a;
  a.mean = std::accumulate(values.begin(), values.end(), 0.0) / a.count;
  if (a.count > 1) {
    double ss = 0.0;
    for (const double v : values) ss += (v - a.mean) * (v - a.mean);
    a.sem = std::sqrt(ss / (static_cast<double>(a.count) * (a.count - 1)));
  }
  return a;
}

ExperimentReport fixed_angle_experiment(ProblemKind kind, int d, int p, int n, int n_instances,
                                        const AngleSchedule& angles, std::uint64_t seed,
                                        int gw_roundings) {
  const double h = field_for(kind, d);
  TreeProblem tree{d, h, p};
  angles.validate_for(tree);
  if (n_instances < 1) throw std::invalid_argument("fixed_angle_experiment: need instances >= 1");
  if (kind == ProblemKind::maxcut && gw_roundings < 1)
    throw std::invalid_argument("fixed_angle_experiment: need gw_roundings >= 1");

  ExperimentReport rep;
  rep.kind = kind;
  rep.d = d;
  rep.p = p;
  rep.n = n;
  rep.instances = n_instances;
  rep.seed = seed;
  rep.gw_roundings = kind == ProblemKind::maxcut ? gw_roundings : 0;
  rep.angles = angles;
  rep.rows.reserve(static_cast<std::size_t>(n_instances));

  std::vector<double> qaoa_vals, base_vals, opt_vals, q_ratios, b_ratios;
  for (int i = 0; i < n_instances; ++i) {
    const std::uint64_t iseed = child_seed(seed, static_cast<std::uint64_t>(i));
    const GraphInstance graph = random_regular(n, d, iseed);
    const StateVector state = qaoa_state(graph, h, d, angles);
    const Expectations ex = expectations(state, graph, h, d);

    InstanceRow row;
    row.seed = iseed;
    row.qaoa_cut_fraction = ex.exp_cut_fraction;
    row.qaoa_cut_edges = ex.exp_cut_fraction * graph.m();
    row.qaoa_independence = ex.exp_independence_objective;
    const double qaoa_metric =
        kind == ProblemKind::maxcut ? ex.exp_cut_fraction : ex.exp_independence_objective;
    qaoa_vals.push_back(qaoa_metric);

    if (kind == ProblemKind::maxcut) {
      const GwResult gw = gw_maxcut(graph, gw_roundings, child_seed(iseed, 1));
      row.baseline = gw.avg_cut / graph.m();
      row.baseline_best = static_cast<double>(gw.best_cut) / graph.m();
    } else {
      const BitVector is = greedy_mis(graph, child_seed(iseed, 2));
      row.baseline = static_cast<double>(std::accumulate(is.begin(), is.end(), 0)) / graph.n;
    }
    base_vals.push_back(*row.baseline);

    if (n <= kBruteForceCap) {
      const BruteForceResult bf = brute_force(graph, kind);
      row.optimum = kind == ProblemKind::maxcut ? bf.value / graph.m() : bf.value / graph.n;
      opt_vals.push_back(*row.optimum);
      if (*row.optimum > 0.0) {
        q_ratios.push_back(qaoa_metric / *row.optimum);
        b_ratios.push_back(*row.baseline / *row.optimum);
      }
    }
    rep.rows.push_back(std::move(row));
  }

  rep.qaoa = aggregate(qaoa_vals);
  rep.baseline = aggregate(base_vals);
  if (!opt_vals.empty()) {
    rep.optimum = aggregate(opt_vals);
    rep.qaoa_ratio = aggregate(q_ratios);
    rep.baseline_ratio = aggregate(b_ratios);
  }
  return rep;
}

}  // namespace treeqaoa
