#include "treeqaoa/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "treeqaoa/rng.hpp"
#include "treeqaoa/statevector.hpp"
#include "treeqaoa/tree_engine.hpp"

namespace treeqaoa {

std::vector<int> GraphInstance::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

std::vector<std::vector<int>> GraphInstance::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return adj;
}

void GraphInstance::validate() const {
  if (n < 0) throw std::invalid_argument("GraphInstance: negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("GraphInstance: vertex index out of range");
    if (u == v) throw std::invalid_argument("GraphInstance: self-loop");
    const auto [lo, hi] = std::minmax(u, v);
    if (!seen.insert({lo, hi}).second)
      throw std::invalid_argument("GraphInstance: duplicate edge");
  }
  if (declared_d) {
    for (int deg : degrees())
      if (deg != *declared_d)
        throw std::invalid_argument("GraphInstance: vertex degree " + std::to_string(deg) +
                                    " violates declared regularity " + std::to_string(*declared_d));
  }
}

GraphInstance random_regular(int n, int d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("random_regular: d must be >= 1");
  if (n <= d) throw std::invalid_argument("random_regular: need n > d");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0)
    throw std::invalid_argument("random_regular: n*d must be even");
  SplitMix64 rng(seed);
  constexpr int kMaxAttempts = 1000000;
  std::vector<int> stubs(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<int>(i) / d;
    rng.shuffle(stubs);
    std::set<std::pair<int, int>> eset;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const int u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        simple = false;
        break;
      }
      const auto [lo, hi] = std::minmax(u, v);
      if (!eset.insert({lo, hi}).second) {
        simple = false;
        break;
      }
    }
    if (!simple) continue;
    GraphInstance g;
    g.n = n;
    g.declared_d = d;
    g.edges.assign(eset.begin(), eset.end());
    g.validate();
    return g;
  }
  throw std::runtime_error("random_regular: pairing restarts exhausted");
}

GraphInstance build_tree_graph(const TreeProblem& problem, TreeVariant variant) {
  problem.validate();
  const TreeSizes sizes = tree_sizes(problem);
  const std::int64_t want =
      variant == TreeVariant::two_tree ? sizes.two_tree : sizes.one_tree;
  // simulation enforces kQubitCap itself; building alone only needs memory
  if (want > (std::int64_t{1} << 20))
    throw CapExceeded("tree graph with " + std::to_string(want) + " vertices is too large");

  GraphInstance g;
  std::vector<std::pair<int, int>> bfs;  // (vertex, depth)
  int next = 0;
  if (variant == TreeVariant::two_tree) {
    g.edges.push_back({0, 1});
    bfs.push_back({0, 0});
    bfs.push_back({1, 0});
    next = 2;
  } else {
    bfs.push_back({0, 0});
    next = 1;
  }
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    const auto [v, depth] = bfs[i];
    if (depth == problem.p) continue;
    const int children =
        depth > 0 ? problem.d - 1
                  : (variant == TreeVariant::two_tree ? problem.d - 1 : problem.d);
    for (int c = 0; c < children; ++c) {
      g.edges.push_back({v, next});
      bfs.push_back({next, depth + 1});
      ++next;
    }
  }
  g.n = next;
  if (next != want) throw std::logic_error("build_tree_graph: size mismatch");
  g.validate();
  return g;
}

void save_graph(const GraphInstance& graph, const std::string& path) {
  graph.validate();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_graph: cannot open " + path);
  out << graph.n << ' ' << graph.m() << '\n';
  for (auto [u, v] : graph.edges) {
    const auto [lo, hi] = std::minmax(u, v);
    out << lo << ' ' << hi << '\n';
  }
  if (!out) throw std::runtime_error("save_graph: write failed for " + path);
}

GraphInstance load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_graph: cannot open " + path);
  GraphInstance g;
  int m = 0;
  if (!(in >> g.n >> m)) throw std::runtime_error("load_graph: bad header in " + path);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw std::runtime_error("load_graph: truncated edge list in " + path);
    if (u >= v) throw std::runtime_error("load_graph: edges must satisfy u < v in " + path);
    g.edges.push_back({u, v});
  }
  g.validate();
  return g;
}

bool is_independent_set(const GraphInstance& graph, const BitVector& bits) {
  if (static_cast<int>(bits.size()) != graph.n)
    throw std::invalid_argument("is_independent_set: size mismatch");
  for (auto [u, v] : graph.edges)
    if (bits[static_cast<std::size_t>(u)] && bits[static_cast<std::size_t>(v)]) return false;
  return true;
}

int cut_size(const GraphInstance& graph, const BitVector& bits) {
  if (static_cast<int>(bits.size()) != graph.n)
    throw std::invalid_argument("cut_size: size mismatch");
  int cut = 0;
  for (auto [u, v] : graph.edges)
    cut += bits[static_cast<std::size_t>(u)] != bits[static_cast<std::size_t>(v)];
  return cut;
}

}  // namespace treeqaoa
