#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "treeqaoa/basis.hpp"
#include "treeqaoa/model.hpp"

// Asymptotic (N -> infinity) QAOA correlators on random d-regular graphs:
// <Z1 Z2> on the edge-rooted tree and <Z1> on the vertex-rooted tree,
// evaluated by recursive contraction from the leaves inward.  Three
// interchangeable backends trade generality for speed:
//   naive  - full (2p+1)-bit strings at every level
//   grown  - strings widen by two bits per level
//   blocks - grown strings split by reflection-symmetry label; only the
//            maximally asymmetric block is ever computed per level
// plus an explicit p=1 closed form.

namespace treeqaoa {

using cplx = std::complex<double>;

enum class Backend { naive, grown, blocks, closed_p1 };

std::string to_string(Backend b);
Backend backend_from_string(const std::string& s);

inline constexpr int kNaiveDepthCap = 5;
inline constexpr int kGrownDepthCap = 7;
inline constexpr int kBlocksDepthCap = 8;
inline constexpr double kImagTolerance = 1e-8;

struct Correlators {
  cplx zz;  // <Z1 Z2> on the central edge of the edge-rooted tree
  cplx z;   // <Z1> at the root of the vertex-rooted tree
};

// single mixer matrix element <b_in| e^{i beta X} |b_out>
cplx mixer_element(int b_in, int b_out, double beta);

// weight of one full-width string: 1/2 times the 2p mixer elements along
// a_1 -> ... -> a_p -> a_0 -> a_-p -> ... -> a_-1 (+beta forward, -beta back)
cplx f_weight(Code a, int p, const std::vector<double>& betas);

Correlators contract_naive(const TreeProblem& problem, const AngleSchedule& angles,
                           int depth_cap = kNaiveDepthCap);
Correlators contract_grown(const TreeProblem& problem, const AngleSchedule& angles,
                           int depth_cap = kGrownDepthCap);
Correlators contract_blocks(const TreeProblem& problem, const AngleSchedule& angles,
                            int depth_cap = kBlocksDepthCap);
Correlators p1_closed_form(const TreeProblem& problem, double gamma, double beta);

// dispatch on backend; closed_p1 requires depth 1
Correlators correlators(const TreeProblem& problem, const AngleSchedule& angles, Backend backend);

// (sqrt(d)/2) Re zz + (h/sqrt(d)) Re z; throws if an imaginary part survives
// above kImagTolerance (the observable is real by construction)
double energy_density(const TreeProblem& problem, const AngleSchedule& angles,
                      Backend backend = Backend::blocks);

struct TreeSizes {
  std::int64_t two_tree;  // vertices of the edge-rooted tree
  std::int64_t one_tree;  // vertices of the vertex-rooted tree
};
TreeSizes tree_sizes(int d, int p);
inline TreeSizes tree_sizes(const TreeProblem& problem) {
  return tree_sizes(problem.d, problem.p);
}

// level-table introspection (tests assert reflection conjugation, symmetry
// fixed points and block sizes on these)
struct LevelTable {
  int level = 0;         // m
  int branch_power = 0;  // d-1, or d for the last level of the vertex-rooted tree
  std::vector<cplx> values;  // dense, indexed by grown code of width 2*level
};

// tables H_{d-1}^{(m)} for m = 1..p of the grown backend
std::vector<LevelTable> grown_level_tables(const TreeProblem& problem, const AngleSchedule& angles,
                                           int depth_cap = kGrownDepthCap);

}  // namespace treeqaoa
