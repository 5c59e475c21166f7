#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "treeqaoa/baselines.hpp"
#include "treeqaoa/rng.hpp"

using namespace treeqaoa;

namespace {

GraphInstance cycle(int n) {
  GraphInstance g;
  g.n = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
  g.edges.push_back({0, n - 1});
  return g;
}

int popcount(const BitVector& bits) { return std::accumulate(bits.begin(), bits.end(), 0); }

}  // namespace

TEST_CASE("gw solves K4") {
  GraphInstance k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, std::nullopt};
  const GwResult res = gw_maxcut(k4, 50, 3);
  CHECK(res.best_cut == 4);
  CHECK(cut_size(k4, res.best_bits) == 4);
  CHECK(res.avg_cut > 3.0);
  CHECK(res.avg_cut <= 4.0);
  CHECK(res.relaxation_converged);
  CHECK(res.rank == static_cast<int>(std::ceil(std::sqrt(8.0))));
  REQUIRE(res.embedding.size() == static_cast<std::size_t>(4 * res.rank));
  for (int i = 0; i < 4; ++i) {
    double norm2 = 0.0;
    for (int c = 0; c < res.rank; ++c) {
      const double x = res.embedding[static_cast<std::size_t>(i * res.rank + c)];
      norm2 += x * x;
    }
    CHECK(std::abs(norm2 - 1.0) < 1e-9);
  }
}

TEST_CASE("gw finds the odd-cycle optimum") {
  const GraphInstance c5 = cycle(5);
  const GwResult res = gw_maxcut(c5, 100, 11);
  CHECK(res.best_cut == 4);
}

TEST_CASE("gw input validation and determinism") {
  const GraphInstance c4 = cycle(4);
  CHECK_THROWS_AS(gw_maxcut(c4, 0, 1), std::invalid_argument);
  const GwResult a = gw_maxcut(c4, 20, 7);
  const GwResult b = gw_maxcut(c4, 20, 7);
  CHECK(a.avg_cut == b.avg_cut);
  CHECK(a.best_cut == b.best_cut);
  CHECK(a.best_bits == b.best_bits);
  GraphInstance empty;
  const GwResult e = gw_maxcut(empty, 10, 1);
  CHECK(e.avg_cut == 0.0);
  CHECK(e.best_cut == 0);
}

TEST_CASE("greedy returns maximal independent sets") {
  const GraphInstance c5 = cycle(5);
  const BitVector is5 = greedy_mis(c5, 2);
  CHECK(is_independent_set(c5, is5));
  CHECK(popcount(is5) == 2);

  GraphInstance star{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, std::nullopt};
  const BitVector leaves = greedy_mis(star, 4);
  CHECK(is_independent_set(star, leaves));
  CHECK(popcount(leaves) == 4);  // min-degree rule picks the leaves, never the hub

  GraphInstance isolated{5, {}, std::nullopt};
  CHECK(popcount(greedy_mis(isolated, 1)) == 5);

  SplitMix64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const GraphInstance g = random_regular(14, 3, rng.next());
    const BitVector is = greedy_mis(g, rng.next());
    CHECK(is_independent_set(g, is));
    CHECK(popcount(is) >= 1);
    // maximality: every unselected vertex has a selected neighbor
    const auto adj = g.adjacency();
    for (int v = 0; v < g.n; ++v) {
      if (is[static_cast<std::size_t>(v)]) continue;
      bool blocked = false;
      for (const int u : adj[static_cast<std::size_t>(v)])
        if (is[static_cast<std::size_t>(u)]) blocked = true;
      CHECK(blocked);
    }
  }
}

TEST_CASE("greedy is deterministic for a fixed seed") {
  const GraphInstance g = random_regular(16, 3, 42);
  CHECK(greedy_mis(g, 9) == greedy_mis(g, 9));
}

TEST_CASE("random sampling cuts half the edges") {
  CHECK(random_sampling_baseline(cycle(6)) == 0.5);
}
