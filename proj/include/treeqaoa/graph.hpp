#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treeqaoa/model.hpp"

namespace treeqaoa {

// 0/1 selection vector over the vertices of a graph
using BitVector = std::vector<int>;

struct GraphInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, 0-indexed
  std::optional<int> declared_d;

  int m() const { return static_cast<int>(edges.size()); }
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;
  // simplicity (no loops / duplicates / out-of-range) and, when declared_d
  // is set, exact regularity
  void validate() const;
};

// configuration-model sample, restarted from scratch whenever the pairing
// produces a loop or a multi-edge
GraphInstance random_regular(int n, int d, std::uint64_t seed);

enum class TreeVariant { one_tree, two_tree };

// explicit regular tree: root(s) at vertex 0 (and 1 for the two-tree, joined
// by an edge) with degree d, interior degree d, leaves at distance p
GraphInstance build_tree_graph(const TreeProblem& problem, TreeVariant variant);

// file format: "N M" line, then M lines "u v" with u < v, 0-indexed
void save_graph(const GraphInstance& graph, const std::string& path);
GraphInstance load_graph(const std::string& path);

bool is_independent_set(const GraphInstance& graph, const BitVector& bits);
int cut_size(const GraphInstance& graph, const BitVector& bits);

}  // namespace treeqaoa
