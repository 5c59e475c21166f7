// Acceptance gate for the published claims.  Each criterion prints exactly one
// [PASS]/[FAIL] line with the measured numbers; the exit code is the number of
// failed criteria.  Tolerances are pinned here, not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "treeqaoa/angle_table.hpp"
#include "treeqaoa/baselines.hpp"
#include "treeqaoa/experiment.hpp"
#include "treeqaoa/graph.hpp"
#include "treeqaoa/metrics.hpp"
#include "treeqaoa/optimizer.hpp"
#include "treeqaoa/rng.hpp"
#include "treeqaoa/statevector.hpp"
#include "treeqaoa/tree_engine.hpp"

using namespace treeqaoa;

namespace {

int failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail, double seconds) {
  std::printf("[%s] %2d %-24s %s (%.1fs)\n", pass ? "PASS" : "FAIL", idx, name, detail.c_str(),
              seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

AngleSchedule draw_angles(int d, int p, SplitMix64& rng) {
  std::vector<double> g(static_cast<std::size_t>(p)), b(static_cast<std::size_t>(p));
  const double gamma_hi = std::numbers::pi * std::sqrt(static_cast<double>(d)) / 2.0;
  for (auto& x : g) x = rng.uniform(1e-3, gamma_hi);
  for (auto& x : b) x = rng.uniform(-std::numbers::pi / 2.0, std::numbers::pi / 2.0);
  return {g, b};
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// 1. naive, grown and blocks agree on (zz, z) within 1e-9 over
//    (d in {3,5,10,100}) x (h in {0, d-2}) x (p in {1,2,3}) x 20 random draws
void criterion_1() {
  Timer timer;
  constexpr double kTol = 1e-9;
  double worst = 0.0;
  SplitMix64 rng(child_seed(20240001, 0));
  for (const int d : {3, 5, 10, 100}) {
    for (const double h : {0.0, static_cast<double>(d) - 2.0}) {
      for (int p = 1; p <= 3; ++p) {
        const TreeProblem problem{d, h, p};
        for (int draw = 0; draw < 20; ++draw) {
          const AngleSchedule angles = draw_angles(d, p, rng);
          const Correlators a = contract_naive(problem, angles);
          const Correlators b = contract_grown(problem, angles);
          const Correlators c = contract_blocks(problem, angles);
          worst = std::max({worst, std::abs(a.zz - b.zz), std::abs(a.z - b.z),
                            std::abs(a.zz - c.zz), std::abs(a.z - c.z)});
        }
      }
    }
  }
  report(1, "backend equivalence", worst <= kTol,
         fmt("max |delta| = %.3g over 480 configs (tol 1e-9)", worst), timer.seconds());
}

// 2. recursive backends match the p=1 closed form to 1e-12, 100 random draws
void criterion_2() {
  Timer timer;
  constexpr double kTol = 1e-12;
  double worst = 0.0;
  SplitMix64 rng(child_seed(20240002, 0));
  for (int draw = 0; draw < 100; ++draw) {
    const int d = 3 + static_cast<int>(rng.below(8));
    const TreeProblem problem{d, rng.uniform(0.0, static_cast<double>(d)), 1};
    const AngleSchedule angles = draw_angles(d, 1, rng);
    const Correlators ref = p1_closed_form(problem, angles.gammas[0], angles.betas[0]);
    for (const Backend backend : {Backend::naive, Backend::grown, Backend::blocks}) {
      const Correlators c = correlators(problem, angles, backend);
      worst = std::max({worst, std::abs(c.zz - ref.zz), std::abs(c.z - ref.z)});
    }
  }
  report(2, "p=1 closed-form parity", worst <= kTol,
         fmt("max |delta| = %.3g over 100 draws (tol 1e-12)", worst), timer.seconds());
}

// 3. dense simulation of the explicit trees equals the contraction to 1e-10
//    for (p,d) in {(1,3),(1,4),(2,3)}, 10 random angle sets each
void criterion_3() {
  Timer timer;
  constexpr double kTol = 1e-10;
  double worst = 0.0;
  SplitMix64 rng(child_seed(20240003, 0));
  for (const auto& [p, d] : {std::pair{1, 3}, std::pair{1, 4}, std::pair{2, 3}}) {
    for (int draw = 0; draw < 10; ++draw) {
      const TreeProblem problem{d, rng.uniform(0.0, static_cast<double>(d)), p};
      const AngleSchedule angles = draw_angles(d, p, rng);
      const Correlators c = contract_blocks(problem, angles);
      const GraphInstance two = build_tree_graph(problem, TreeVariant::two_tree);
      const StateVector s2 = qaoa_state(two, problem.h, d, angles);
      const GraphInstance one = build_tree_graph(problem, TreeVariant::one_tree);
      const StateVector s1 = qaoa_state(one, problem.h, d, angles);
      worst = std::max({worst, std::abs(edge_zz(s2, 0, 1) - c.zz.real()),
                        std::abs(vertex_z(s1, 0) - c.z.real())});
    }
  }
  report(3, "statevector oracle", worst <= kTol,
         fmt("max |delta| = %.3g over 30 angle sets (tol 1e-10)", worst), timer.seconds());
}

// shared optimizer runs for criteria 4 and 5
struct LadderRuns {
  std::vector<OptimizationResult> maxcut;  // d=3, h=0, p=1..4
  std::vector<OptimizationResult> mis;     // d=3, h=1, p=1..2
};

LadderRuns run_ladders() {
  OptimizationConfig config;
  config.seed = 20240004;
  LadderRuns runs;
  runs.maxcut = warm_start_ladder(TreeProblem{3, 0.0, 1}, 4, config);
  runs.mis = warm_start_ladder(TreeProblem{3, 1.0, 1}, 2, config);
  return runs;
}

// 4. optimizer reaches the published tree-angle energies (MaxCut d=3 p=1..3,
//    MIS d=3 p=1..2) and the published angles are stationary points
void criterion_4(const LadderRuns& runs, double setup_seconds) {
  Timer timer;
  constexpr double kEnergyTol = 1e-5;
  constexpr double kGradTol = 1e-3;
  double worst_excess = -1e300, worst_grad = 0.0;
  bool pass = true;
  const auto check = [&](ProblemKind kind, double h, int p, const OptimizationResult& res) {
    const TreeProblem problem{3, h, p};
    const AngleSchedule& golden = golden_angles(kind, 3, p);
    const double paper_energy = energy_density(problem, golden, Backend::blocks);
    const double grad = fd_gradient_norm(problem, golden);
    worst_excess = std::max(worst_excess, res.best_energy - paper_energy);
    worst_grad = std::max(worst_grad, grad);
    if (!(res.best_energy <= paper_energy + kEnergyTol) || !(grad <= kGradTol)) pass = false;
  };
  for (int p = 1; p <= 3; ++p)
    check(ProblemKind::maxcut, 0.0, p, runs.maxcut[static_cast<std::size_t>(p - 1)]);
  for (int p = 1; p <= 2; ++p)
    check(ProblemKind::mis, 1.0, p, runs.mis[static_cast<std::size_t>(p - 1)]);
  report(4, "published-angle parity", pass,
         fmt("max energy excess = %.3g (tol 1e-5), max grad at published angles = %.3g "
             "(tol 1e-3)",
             worst_excess, worst_grad),
         setup_seconds + timer.seconds());
}

// 5. c_1(d=3) = 0.6924 +- 1e-3, alpha_MC = 0.749 +- 0.002, and the p=4 ratio
//    beats the internally computed GW constant (which lies in [0.87, 0.88])
void criterion_5(const LadderRuns& runs) {
  Timer timer;
  const double c_ub = BoundsTable::embedded().find(3)->c_ub;
  const auto cut_at = [&](int p) {
    const TreeProblem problem{3, 0.0, p};
    const Correlators c =
        contract_blocks(problem, runs.maxcut[static_cast<std::size_t>(p - 1)].best_angles);
    return cut_fraction(c.zz.real());
  };
  const double c1 = cut_at(1);
  const double alpha1 = c1 / c_ub;
  const double alpha4 = cut_at(4) / c_ub;
  const double alpha_gw = gw_guarantee_constant();
  const bool pass = std::abs(c1 - 0.6924) <= 1e-3 && std::abs(alpha1 - 0.749) <= 0.002 &&
                    alpha_gw >= 0.87 && alpha_gw <= 0.88 && alpha4 > alpha_gw;
  report(5, "headline ratios", pass,
         fmt("c_1 = %.5f, alpha_MC(p=1) = %.4f, alpha_MC(p=4) = %.4f vs alpha_GW = 0.8786", c1,
             alpha1, alpha4),
         timer.seconds());
}

// 6. at p=1, alpha_MC strictly increases and alpha_MIS strictly decreases
//    across d in {3,...,10,20,50,100} with per-d optimized angles
void criterion_6() {
  Timer timer;
  const std::vector<int> ds{3, 4, 5, 6, 7, 8, 9, 10, 20, 50, 100};
  std::vector<double> alpha_mc, alpha_mis;
  OptimizationConfig config;
  config.seed = 20240006;
  for (const int d : ds) {
    const auto entry = BoundsTable::embedded().find(d);
    const TreeProblem cut_problem{d, 0.0, 1};
    const OptimizationResult cut = optimize(cut_problem, config);
    const Correlators cc = contract_blocks(cut_problem, cut.best_angles);
    alpha_mc.push_back(cut_fraction(cc.zz.real()) / entry->c_ub);

    const TreeProblem mis_problem{d, static_cast<double>(d) - 2.0, 1};
    const OptimizationResult mis = optimize(mis_problem, config);
    const Correlators mc = contract_blocks(mis_problem, mis.best_angles);
    alpha_mis.push_back(independence_ratio(mc.zz.real(), mc.z.real(), d) / entry->r_ub);
  }
  bool increasing = true;
  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
    if (!(alpha_mc[i + 1] > alpha_mc[i])) increasing = false;
    if (!(alpha_mis[i + 1] < alpha_mis[i])) decreasing = false;
  }
  report(6, "ratio monotonicity in d", increasing && decreasing,
         fmt("alpha_MC %.4f -> %.4f rising, alpha_MIS %.4f falling", alpha_mc.front(),
             alpha_mc.back(), alpha_mis.front()) +
             fmt(" -> %.4f", alpha_mis.back()),
         timer.seconds());
}

// 7. the d=3, p=1 field sweep keeps alpha_MIS inside 0.60 +- 0.05 on [0, 2.8]
void criterion_7() {
  Timer timer;
  const double r_ub = BoundsTable::embedded().find(3)->r_ub;
  std::vector<double> grid;
  for (int i = 0; i <= 28; ++i) grid.push_back(0.1 * i);
  OptimizationConfig config;
  config.seed = 20240007;
  const auto points = sweep_field(3, 1, grid, config);
  double lo = 1e300, hi = -1e300, first_bad_h = -1.0, first_bad_alpha = 0.0;
  bool pass = true;
  for (const auto& [h, res] : points) {
    const TreeProblem problem{3, h, 1};
    const Correlators c = contract_blocks(problem, res.best_angles);
    const double alpha = independence_ratio(c.zz.real(), c.z.real(), 3) / r_ub;
    lo = std::min(lo, alpha);
    hi = std::max(hi, alpha);
    if ((alpha < 0.55 || alpha > 0.65) && pass) {
      pass = false;
      first_bad_h = h;
      first_bad_alpha = alpha;
    }
  }
  std::string detail = fmt("alpha_MIS in [%.3f, %.3f] over h in [0, 2.8] (window 0.55..0.65)",
                           lo, hi);
  if (!pass)
    detail += fmt("; leaves the window at h = %.1f with alpha = %.3f", first_bad_h,
                  first_bad_alpha);
  report(7, "MIS plateau level", pass, detail, timer.seconds());
}

// 8. on 50 brute-forced n=16 cubic instances the GW rounding average stays
//    above 0.878 x optimum and every greedy run clears ceil(0.6 |MIS|)
void criterion_8() {
  Timer timer;
  bool pass = true;
  double min_gw_ratio = 1e300;
  int min_greedy_margin = 1 << 20;
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t iseed = child_seed(20240008, static_cast<std::uint64_t>(i));
    const GraphInstance g = random_regular(16, 3, iseed);
    const double opt_cut = brute_force(g, ProblemKind::maxcut).value;
    const GwResult gw = gw_maxcut(g, 100, child_seed(iseed, 1));
    min_gw_ratio = std::min(min_gw_ratio, gw.avg_cut / opt_cut);
    if (!(gw.avg_cut >= 0.878 * opt_cut)) pass = false;

    const int mis_size = static_cast<int>(brute_force(g, ProblemKind::mis).value);
    const BitVector greedy = greedy_mis(g, child_seed(iseed, 2));
    int got = 0;
    for (const int b : greedy) got += b;
    const int needed = (3 * mis_size + 4) / 5;  // ceil(0.6 |MIS|)
    min_greedy_margin = std::min(min_greedy_margin, got - needed);
    if (got < needed) pass = false;
  }
  report(8, "finite-size guarantees", pass,
         fmt("min gw_avg/opt = %.4f (floor 0.878), min greedy slack = %.0f vertices",
             min_gw_ratio, static_cast<double>(min_greedy_margin)),
         timer.seconds());
}

// 9. fixed tree angles transfer to n=16 instances: mean cut fraction within
//    0.05 of the asymptotic c_p for p in {1,2,3}, and greedy beats QAOA on the
//    MIS metric at p=1
void criterion_9() {
  Timer timer;
  bool pass = true;
  double worst_gap = 0.0;
  for (int p = 1; p <= 3; ++p) {
    const AngleSchedule& angles = golden_angles(ProblemKind::maxcut, 3, p);
    const TreeProblem problem{3, 0.0, p};
    const double c_p = cut_fraction(contract_blocks(problem, angles).zz.real());
    const ExperimentReport rep =
        fixed_angle_experiment(ProblemKind::maxcut, 3, p, 16, 200, angles, 20240009, 10);
    const double gap = std::abs(rep.qaoa.mean - c_p);
    worst_gap = std::max(worst_gap, gap);
    if (!(gap <= 0.05)) pass = false;
  }
  const ExperimentReport mis = fixed_angle_experiment(
      ProblemKind::mis, 3, 1, 16, 200, golden_angles(ProblemKind::mis, 3, 1), 20240009);
  const bool greedy_above = mis.baseline.mean > mis.qaoa.mean;
  if (!greedy_above) pass = false;
  report(9, "finite-size transfer", pass,
         fmt("max |cut - c_p| = %.4f (tol 0.05); greedy %.3f vs qaoa %.3f at p=1", worst_gap,
             mis.baseline.mean, mis.qaoa.mean),
         timer.seconds());
}

// 10. randomized invariants: f normalization, t=0 fixed point, reflection
//     conjugation, Z2 symmetry at h=0, pruning feasibility, unit-norm
//     embeddings -- 1000 trials
void criterion_10() {
  Timer timer;
  int ok = 0;
  const int kTrials = 1000;
  for (int trial = 0; trial < kTrials; ++trial) {
    SplitMix64 rng(child_seed(20240010, static_cast<std::uint64_t>(trial)));
    bool good = true;

    const int p = 1 + static_cast<int>(rng.below(3));
    std::vector<double> betas(static_cast<std::size_t>(p));
    for (auto& b : betas) b = rng.uniform(-1.5, 1.5);
    cplx fsum{0.0, 0.0};
    for (Code a = 0; a < (Code{1} << (2 * p + 1)); ++a) fsum += f_weight(a, p, betas);
    if (std::abs(fsum - cplx{1.0, 0.0}) > 1e-12) good = false;

    const int d = 3 + static_cast<int>(rng.below(5));
    const TreeProblem problem{d, rng.uniform(0.0, 3.0), p};
    const AngleSchedule angles = draw_angles(d, p, rng);
    const auto tables = grown_level_tables(problem, angles);
    for (const auto& table : tables) {
      const int m = table.level;
      for (Code a = 0; a < static_cast<Code>(table.values.size()); ++a) {
        if (std::abs(table.values[reflect(a, m)] - std::conj(table.values[a])) > 1e-12)
          good = false;
        const int t = symmetry_label(a, m);
        if (t == 0 && std::abs(table.values[a] - cplx{1.0, 0.0}) > 1e-12) good = false;
        if (t > 0 && t < m &&
            std::abs(table.values[a] -
                     tables[static_cast<std::size_t>(t - 1)].values[truncate_center(a, m, t)]) >
                1e-9)
          good = false;
      }
    }

    const TreeProblem symmetric{d, 0.0, p};
    if (std::abs(contract_blocks(symmetric, angles).z) > 1e-10) good = false;

    const int n = 8 + 2 * static_cast<int>(rng.below(4));
    const GraphInstance g = random_regular(n, 3, rng.next());
    BitVector bits(static_cast<std::size_t>(n));
    for (auto& b : bits) b = rng.coin() ? 1 : 0;
    const double energy = mis_energy(g, bits, 1.0);
    const BitVector pruned = prune(g, bits, rng.next());
    if (!is_independent_set(g, pruned)) good = false;
    int size = 0;
    for (const int b : pruned) size += b;
    if (energy < 0.0 && size < -energy) good = false;

    const GwResult gw = gw_maxcut(g, 2, rng.next());
    for (int v = 0; v < n; ++v) {
      double norm2 = 0.0;
      for (int c = 0; c < gw.rank; ++c) {
        const double x = gw.embedding[static_cast<std::size_t>(v * gw.rank + c)];
        norm2 += x * x;
      }
      if (std::abs(norm2 - 1.0) > 1e-9) good = false;
    }

    ok += good;
  }
  report(10, "invariant suite", ok == kTrials,
         fmt("%.0f/1000 randomized trials clean", static_cast<double>(ok)), timer.seconds());
}

}  // namespace

int main() {
  std::printf("acceptance gate: asymptotic-QAOA artifact\n");
  criterion_1();
  criterion_2();
  criterion_3();
  const Timer ladder_timer;
  const LadderRuns runs = run_ladders();
  const double ladder_seconds = ladder_timer.seconds();
  criterion_4(runs, ladder_seconds);
  criterion_5(runs);
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0)
    std::printf("all criteria satisfied\n");
  else
    std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
