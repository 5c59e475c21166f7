#include "treeqaoa/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "treeqaoa/rng.hpp"

namespace treeqaoa {

namespace {

void normalize_row(std::vector<double>& a, std::size_t i, int k) {
  double s = 0.0;
  for (int c = 0; c < k; ++c) s += a[i * k + c] * a[i * k + c];
  s = std::sqrt(s);
  if (s < 1e-300) {
    a[i * k] = 1.0;
    for (int c = 1; c < k; ++c) a[i * k + c] = 0.0;
    return;
  }
  for (int c = 0; c < k; ++c) a[i * k + c] /= s;
}

}  // namespace

GwResult gw_maxcut(const GraphInstance& graph, int roundings, std::uint64_t seed) {
  graph.validate();
  if (roundings < 1) throw std::invalid_argument("gw_maxcut: roundings must be >= 1");
  const int n = graph.n;
  GwResult res;
  res.best_bits.assign(static_cast<std::size_t>(std::max(n, 0)), 0);
  if (n == 0 || graph.edges.empty()) {
    res.relaxation_converged = true;
    return res;
  }

  const int k = static_cast<int>(std::ceil(std::sqrt(2.0 * n)));
  SplitMix64 rng(seed);
  std::vector<double> v(static_cast<std::size_t>(n) * k);
  for (auto& x : v) x = rng.gaussian();
  for (int i = 0; i < n; ++i) normalize_row(v, static_cast<std::size_t>(i), k);

  const auto adj = graph.adjacency();
  // maximize the relaxed cut sum_{ij in E} (1 - v_i.v_j)/2 over unit rows by
  // Gauss-Seidel sweeps: each row jumps to the unit vector opposing the sum
  // of its neighbor rows, the exact per-row maximizer.  Monotone in the
  // objective and much faster than gradient steps near flat optimal faces.
  constexpr int kMaxSweeps = 5000;
  constexpr double kGradTolerance = 1e-7;
  std::vector<double> s(static_cast<std::size_t>(k));
  int it = 0;
  for (; it < kMaxSweeps; ++it) {
    for (int i = 0; i < n; ++i) {
      double norm2 = 0.0;
      for (int c = 0; c < k; ++c) {
        double t = 0.0;
        for (const int j : adj[static_cast<std::size_t>(i)]) t += v[static_cast<std::size_t>(j) * k + c];
        s[static_cast<std::size_t>(c)] = t;
        norm2 += t * t;
      }
      if (norm2 > 1e-300) {  // a vanishing neighbor sum leaves the row free
        const double inv = -1.0 / std::sqrt(norm2);
        for (int c = 0; c < k; ++c) v[static_cast<std::size_t>(i) * k + c] = s[static_cast<std::size_t>(c)] * inv;
      }
    }
    // stationarity residual: tangential part of the objective gradient,
    // whose euclidean form is -(1/2) sum of neighbor rows
    double gnorm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double proj = 0.0;
      for (int c = 0; c < k; ++c) {
        double g = 0.0;
        for (const int j : adj[static_cast<std::size_t>(i)])
          g -= 0.5 * v[static_cast<std::size_t>(j) * k + c];
        s[static_cast<std::size_t>(c)] = g;
        proj += g * v[static_cast<std::size_t>(i) * k + c];
      }
      for (int c = 0; c < k; ++c) {
        const double g = s[static_cast<std::size_t>(c)] - proj * v[static_cast<std::size_t>(i) * k + c];
        gnorm2 += g * g;
      }
    }
    if (std::sqrt(gnorm2) <= kGradTolerance) {
      res.relaxation_converged = true;
      ++it;
      break;
    }
  }
  res.iterations = it;
  res.embedding = v;
  res.rank = k;

  // random-hyperplane roundings
  long long total = 0;
  std::vector<double> r(static_cast<std::size_t>(k));
  BitVector bits(static_cast<std::size_t>(n));
  for (int round = 0; round < roundings; ++round) {
    for (auto& x : r) x = rng.gaussian();
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int c = 0; c < k; ++c) s += v[static_cast<std::size_t>(i) * k + c] * r[static_cast<std::size_t>(c)];
      bits[static_cast<std::size_t>(i)] = s >= 0.0 ? 1 : 0;
    }
    const int cut = cut_size(graph, bits);
    total += cut;
    if (cut > res.best_cut) {
      res.best_cut = cut;
      res.best_bits = bits;
    }
  }
  res.avg_cut = static_cast<double>(total) / roundings;
  return res;
}

BitVector greedy_mis(const GraphInstance& graph, std::uint64_t seed) {
  graph.validate();
  SplitMix64 rng(seed);
  const int n = graph.n;
  const auto adj = graph.adjacency();
  std::vector<int> degree = graph.degrees();
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  BitVector out(static_cast<std::size_t>(n), 0);
  int remaining = n;

  const auto remove_vertex = [&](int x) {
    alive[static_cast<std::size_t>(x)] = 0;
    --remaining;
    for (const int y : adj[static_cast<std::size_t>(x)])
      if (alive[static_cast<std::size_t>(y)]) --degree[static_cast<std::size_t>(y)];
  };

  std::vector<int> candidates;
  while (remaining > 0) {
    int min_deg = std::numeric_limits<int>::max();
    for (int vtx = 0; vtx < n; ++vtx)
      if (alive[static_cast<std::size_t>(vtx)])
        min_deg = std::min(min_deg, degree[static_cast<std::size_t>(vtx)]);
    candidates.clear();
    for (int vtx = 0; vtx < n; ++vtx)
      if (alive[static_cast<std::size_t>(vtx)] && degree[static_cast<std::size_t>(vtx)] == min_deg)
        candidates.push_back(vtx);
    const int pick = candidates[rng.below(candidates.size())];
    out[static_cast<std::size_t>(pick)] = 1;
    remove_vertex(pick);
    for (const int y : adj[static_cast<std::size_t>(pick)])
      if (alive[static_cast<std::size_t>(y)]) remove_vertex(y);
  }
  return out;
}

double random_sampling_baseline(const GraphInstance&) { return 0.5; }

}  // namespace treeqaoa
