#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "treeqaoa/experiment.hpp"
#include "treeqaoa/graph.hpp"
#include "treeqaoa/rng.hpp"
#include "treeqaoa/statevector.hpp"
#include "treeqaoa/tree_engine.hpp"

using namespace treeqaoa;

namespace {

GraphInstance complete_graph(int n) {
  GraphInstance g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges.push_back({u, v});
  return g;
}

}  // namespace

TEST_CASE("random regular sampling") {
  for (const auto& [n, d] : {std::pair{16, 3}, std::pair{12, 4}, std::pair{10, 5}}) {
    const GraphInstance g = random_regular(n, d, 77);
    CHECK(g.n == n);
    CHECK(g.m() == n * d / 2);
    CHECK(g.declared_d == d);
    CHECK_NOTHROW(g.validate());
    for (const int deg : g.degrees()) CHECK(deg == d);
    for (const auto& [u, v] : g.edges) CHECK(u < v);
  }
  const GraphInstance a = random_regular(16, 3, 5);
  const GraphInstance b = random_regular(16, 3, 5);
  CHECK(a.edges == b.edges);
  const GraphInstance c = random_regular(16, 3, 6);
  CHECK(a.edges != c.edges);
  CHECK_THROWS_AS(random_regular(9, 3, 1), std::invalid_argument);   // odd n*d
  CHECK_THROWS_AS(random_regular(4, 4, 1), std::invalid_argument);   // d >= n
  CHECK_THROWS_AS(random_regular(4, 0, 1), std::invalid_argument);
}

TEST_CASE("graph validation rejects malformed edge lists") {
  GraphInstance loop{3, {{1, 1}}, std::nullopt};
  CHECK_THROWS_AS(loop.validate(), std::invalid_argument);
  GraphInstance dup{3, {{0, 1}, {0, 1}}, std::nullopt};
  CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
  GraphInstance range{2, {{0, 5}}, std::nullopt};
  CHECK_THROWS_AS(range.validate(), std::invalid_argument);
  GraphInstance irregular{4, {{0, 1}, {2, 3}}, 3};
  CHECK_THROWS_AS(irregular.validate(), std::invalid_argument);
}

TEST_CASE("explicit tree graphs have the predicted size and degrees") {
  for (const auto& [d, p] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 1}}) {
    const TreeProblem problem{d, 0.0, p};
    const TreeSizes sizes = tree_sizes(problem);
    const GraphInstance two = build_tree_graph(problem, TreeVariant::two_tree);
    const GraphInstance one = build_tree_graph(problem, TreeVariant::one_tree);
    CHECK(two.n == sizes.two_tree);
    CHECK(one.n == sizes.one_tree);
    CHECK(two.m() == two.n - 1);  // trees
    CHECK(one.m() == one.n - 1);
    const auto deg2 = two.degrees();
    CHECK(deg2[0] == d);
    CHECK(deg2[1] == d);
    CHECK(*std::max_element(deg2.begin(), deg2.end()) == d);
    CHECK(one.degrees()[0] == d);
  }
}

TEST_CASE("graph file round trip") {
  const GraphInstance g = random_regular(10, 3, 3);
  const std::string path = "/tmp/treeqaoa_test_graph.txt";
  save_graph(g, path);
  const GraphInstance back = load_graph(path);
  CHECK(back.n == g.n);
  CHECK(back.edges == g.edges);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_graph("/nonexistent/graph.txt"), std::runtime_error);
}

TEST_CASE("cut size and independence checks") {
  const GraphInstance k4 = complete_graph(4);
  CHECK(cut_size(k4, {0, 0, 1, 1}) == 4);
  CHECK(cut_size(k4, {0, 0, 0, 0}) == 0);
  CHECK(cut_size(k4, {1, 0, 0, 0}) == 3);
  CHECK(is_independent_set(k4, {1, 0, 0, 0}));
  CHECK(!is_independent_set(k4, {1, 1, 0, 0}));
  CHECK(is_independent_set(k4, {0, 0, 0, 0}));
}

TEST_CASE("qaoa state is normalized and uniform at zero angles") {
  const GraphInstance g = random_regular(10, 3, 9);
  const StateVector zero = qaoa_state(g, 0.0, 3, AngleSchedule{{0.0}, {0.0}});
  CHECK(std::abs(zero.norm() - 1.0) < 1e-12);
  const double amp = 1.0 / std::sqrt(1024.0);
  for (const auto& a : zero.amplitudes) CHECK(std::abs(a - cplx{amp, 0.0}) < 1e-12);

  const StateVector state = qaoa_state(g, 1.0, 3, AngleSchedule{{0.7, 0.3}, {-0.5, -0.2}});
  CHECK(std::abs(state.norm() - 1.0) < 1e-12);
}

TEST_CASE("qubit and brute force caps") {
  GraphInstance big;
  big.n = kQubitCap + 1;
  big.edges = {{0, 1}};
  CHECK_THROWS_AS(qaoa_state(big, 0.0, 3, AngleSchedule{{0.1}, {0.1}}), CapExceeded);
  GraphInstance bf;
  bf.n = kBruteForceCap + 1;
  bf.edges = {{0, 1}};
  CHECK_THROWS_AS(brute_force(bf, ProblemKind::maxcut), CapExceeded);
}

TEST_CASE("expectations at zero angles match uniform sampling") {
  const GraphInstance k4 = complete_graph(4);
  const StateVector state = qaoa_state(k4, 0.0, 3, AngleSchedule{{0.0}, {0.0}});
  const Expectations ex = expectations(state, k4, 0.0, 3);
  CHECK(std::abs(ex.mean_zz_per_edge) < 1e-12);
  CHECK(std::abs(ex.mean_z_per_vertex) < 1e-12);
  CHECK(std::abs(ex.exp_cut_fraction - 0.5) < 1e-12);
  // E[#edges inside - #selected]/n under uniform bits: (m/4 - n/2)/n
  CHECK(std::abs(ex.exp_independence_objective - 0.125) < 1e-12);
  CHECK(std::abs(ex.energy) < 1e-12);
}

TEST_CASE("statevector on the explicit 2-tree matches the contraction") {
  SplitMix64 rng(13);
  const TreeProblem problem{3, 1.0, 1};
  const GraphInstance two = build_tree_graph(problem, TreeVariant::two_tree);
  const GraphInstance one = build_tree_graph(problem, TreeVariant::one_tree);
  for (int trial = 0; trial < 3; ++trial) {
    const AngleSchedule angles{{rng.uniform(0.05, 1.2)}, {rng.uniform(-1.2, -0.05)}};
    const Correlators c = p1_closed_form(problem, angles.gammas[0], angles.betas[0]);
    const StateVector s2 = qaoa_state(two, problem.h, problem.d, angles);
    CHECK(std::abs(edge_zz(s2, 0, 1) - c.zz.real()) < 1e-10);
    const StateVector s1 = qaoa_state(one, problem.h, problem.d, angles);
    CHECK(std::abs(vertex_z(s1, 0) - c.z.real()) < 1e-10);
  }
}

TEST_CASE("brute force optima on small graphs") {
  const GraphInstance k4 = complete_graph(4);
  const BruteForceResult cut = brute_force(k4, ProblemKind::maxcut);
  CHECK(cut.value == 4.0);
  CHECK(cut_size(k4, cut.witness) == 4);
  const BruteForceResult mis = brute_force(k4, ProblemKind::mis);
  CHECK(mis.value == 1.0);
  CHECK(is_independent_set(k4, mis.witness));

  GraphInstance path{3, {{0, 1}, {1, 2}}, std::nullopt};
  CHECK(brute_force(path, ProblemKind::maxcut).value == 2.0);
  CHECK(brute_force(path, ProblemKind::mis).value == 2.0);

  const GraphInstance g = random_regular(12, 3, 21);
  const BruteForceResult r = brute_force(g, ProblemKind::mis);
  CHECK(is_independent_set(g, r.witness));
  int wsize = 0;
  for (const int b : r.witness) wsize += b;
  CHECK(wsize == static_cast<int>(r.value));
}

TEST_CASE("aggregate statistics") {
  const Aggregate a = aggregate({1.0, 2.0, 3.0});
  CHECK(a.count == 3);
  CHECK(std::abs(a.mean - 2.0) < 1e-15);
  CHECK(std::abs(a.sem - 1.0 / std::sqrt(3.0)) < 1e-12);
  const Aggregate single = aggregate({5.0});
  CHECK(single.count == 1);
  CHECK(single.mean == 5.0);
  CHECK(single.sem == 0.0);
}

TEST_CASE("fixed-angle experiment report is internally consistent") {
  const AngleSchedule angles{{0.5330}, {-0.3927}};
  const ExperimentReport rep =
      fixed_angle_experiment(ProblemKind::maxcut, 3, 1, 12, 4, angles, 5, 20);
  CHECK(rep.rows.size() == 4);
  CHECK(rep.qaoa.count == 4);
  CHECK(rep.qaoa.mean > 0.5);
  CHECK(rep.qaoa.mean < 1.0);
  REQUIRE(rep.optimum.has_value());
  REQUIRE(rep.qaoa_ratio.has_value());
  CHECK(rep.qaoa_ratio->mean <= 1.0 + 1e-12);
  REQUIRE(rep.baseline_ratio.has_value());
  CHECK(rep.baseline_ratio->mean <= 1.0 + 1e-12);
  for (const InstanceRow& row : rep.rows) {
    REQUIRE(row.optimum.has_value());
    REQUIRE(row.baseline.has_value());
    REQUIRE(row.baseline_best.has_value());
    CHECK(row.qaoa_cut_fraction <= *row.optimum + 1e-9);
    CHECK(*row.baseline_best <= *row.optimum + 1e-9);
    CHECK(std::abs(row.qaoa_cut_edges - row.qaoa_cut_fraction * 18.0) < 1e-9);
  }

  const ExperimentReport mis =
      fixed_angle_experiment(ProblemKind::mis, 3, 1, 12, 4, AngleSchedule{{0.4299}, {-0.3986}}, 5);
  CHECK(mis.qaoa.count == 4);
  for (const InstanceRow& row : mis.rows) {
    REQUIRE(row.baseline.has_value());
    CHECK(*row.baseline > 0.0);
    CHECK(*row.baseline <= 0.5);  // an IS of a cubic graph has at most n/2 vertices
  }
}

TEST_CASE("experiment rejects inconsistent parameters") {
  CHECK_THROWS_AS(
      fixed_angle_experiment(ProblemKind::maxcut, 3, 1, 9, 2, AngleSchedule{{0.5}, {-0.4}}, 1),
      std::invalid_argument);  // odd n*d
  CHECK_THROWS_AS(
      fixed_angle_experiment(ProblemKind::maxcut, 3, 2, 12, 2, AngleSchedule{{0.5}, {-0.4}}, 1),
      std::invalid_argument);  // angle depth mismatch
}
