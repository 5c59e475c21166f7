#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treeqaoa/graph.hpp"
#include "treeqaoa/model.hpp"

// Problem-level performance metrics derived from the correlators, and the
// published per-d bounds they are measured against.

namespace treeqaoa {

struct BoundEntry {
  double c_ub = 0.0;                  // upper bound on the optimal cut fraction
  double r_ub = 0.0;                  // upper bound on the independence ratio
  std::optional<double> mu_star_lb;   // lower bound on the clustering onset
};

struct BoundsTable {
  std::map<int, BoundEntry> entries;
  std::string source_json;  // the exact asset bytes, hashed into outputs

  static const BoundsTable& embedded();
  static BoundsTable from_file(const std::string& path);
  static BoundsTable from_json(const std::string& json_text);

  std::optional<BoundEntry> find(int d) const;
  // FNV-1a 64-bit hash of source_json, 16 hex digits
  std::string content_hash() const;
};

// c_p = (1 - zz)/2; zz must lie in [-1, 1]
double cut_fraction(double zz);

// r_p = -(d/8) zz + ((2-d)/4) z + (4-d)/8; non-positive values mean "no
// meaningful independent set"
double independence_ratio(double zz, double z, int d);

// the Ising field maps to a valid MIS encoding iff h in ]d-2, d]
bool mis_field_valid(int d, double h);

struct PerformanceRecord {
  int d = 0;
  double h = 0.0;
  int p = 0;
  double energy_density = 0.0;
  double c_p = 0.0;
  double r_p = 0.0;
  std::optional<double> alpha_mc;   // c_p / c_ub(d); absent when d unknown
  std::optional<double> alpha_mis;  // r_p / r_ub(d); may be negative, see flag
  bool mis_valid = false;           // field inside the MIS encoding window
};

// fill the alpha ratios (and validity flag) of a record whose c_p/r_p are set
PerformanceRecord approximation_ratios(PerformanceRecord rec, const BoundsTable& bounds);

// assemble the full record from raw correlators
PerformanceRecord performance_record(const TreeProblem& problem, double zz, double z,
                                     const BoundsTable& bounds);

// lambda * (# edges with both endpoints selected) - (# selected vertices)
double mis_energy(const GraphInstance& graph, const BitVector& bits, double lambda);

// repair a bitstring into an independent set: while an edge is violated,
// flip a uniformly random endpoint of a randomly chosen violated edge (never
// increases the energy); non-negative-energy inputs fall back to a single
// random vertex
BitVector prune(const GraphInstance& graph, BitVector bits, std::uint64_t seed);

// min over x in [-1, 1) of 2 arccos(x) / (pi (1 - x)) ~ 0.878567
double gw_guarantee_constant();

// minimal-greedy guarantee 3/(d+2)
double greedy_guarantee(int d);

}  // namespace treeqaoa
