#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

// Problem data for QAOA on the random d-regular ensemble,
//   H = (1/sqrt(d)) * ( sum_{ij in E} Z_i Z_j + h * sum_i Z_i ),
// h = 0 for MaxCut, h = d - 2/lambda for maximum independent set.

namespace treeqaoa {

// Thrown when a requested computation exceeds a configured resource cap
// (contraction depth, qubit count, brute-force size).  CLI maps this to
// exit code 3, plain validation errors to exit code 2.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TreeProblem {
  int d = 3;
  double h = 0.0;
  int p = 1;

  void validate() const {
    if (d < 3) throw std::invalid_argument("TreeProblem: d must be >= 3");
    if (p < 1) throw std::invalid_argument("TreeProblem: p must be >= 1");
    if (!std::isfinite(h)) throw std::invalid_argument("TreeProblem: h must be finite");
  }
};

struct AngleSchedule {
  std::vector<double> gammas;
  std::vector<double> betas;

  AngleSchedule() = default;
  AngleSchedule(std::vector<double> g, std::vector<double> b)
      : gammas(std::move(g)), betas(std::move(b)) {}

  int depth() const { return static_cast<int>(gammas.size()); }

  void validate() const {
    if (gammas.empty() || gammas.size() != betas.size())
      throw std::invalid_argument("AngleSchedule: gammas and betas must be non-empty, equal length");
    for (double g : gammas)
      if (!std::isfinite(g)) throw std::invalid_argument("AngleSchedule: non-finite gamma");
    for (double b : betas)
      if (!std::isfinite(b)) throw std::invalid_argument("AngleSchedule: non-finite beta");
  }

  void validate_for(const TreeProblem& problem) const {
    problem.validate();
    validate();
    if (depth() != problem.p)
      throw std::invalid_argument("AngleSchedule: length " + std::to_string(depth()) +
                                  " does not match problem depth p = " + std::to_string(problem.p));
  }
};

enum class ProblemKind { maxcut, mis };

inline double field_for(ProblemKind kind, int d, double lambda = 1.0) {
  return kind == ProblemKind::maxcut ? 0.0 : d - 2.0 / lambda;
}

inline std::string to_string(ProblemKind kind) {
  return kind == ProblemKind::maxcut ? "maxcut" : "mis";
}

inline ProblemKind problem_from_string(const std::string& s) {
  if (s == "maxcut") return ProblemKind::maxcut;
  if (s == "mis") return ProblemKind::mis;
  throw std::invalid_argument("unknown problem: " + s);
}

}  // namespace treeqaoa
