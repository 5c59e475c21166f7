#include "treeqaoa/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "treeqaoa/rng.hpp"

namespace treeqaoa {

namespace {

using Objective = std::function<double(const std::vector<double>&)>;

struct NmOutcome {
  std::vector<double> x;
  double fx = std::numeric_limits<double>::infinity();
  bool converged = false;
};

// standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2); converged when the simplex f-spread drops below tolerance
NmOutcome nelder_mead(const Objective& f, const std::vector<double>& x0,
                      const std::vector<double>& init_step, int max_iterations,
                      double tolerance) {
  struct Vertex {
    double f;
    std::vector<double> x;
  };
  const std::size_t n = x0.size();
  std::vector<Vertex> s;
  s.reserve(n + 1);
  s.push_back({f(x0), x0});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x = x0;
    x[i] += init_step[i];
    s.push_back({f(x), std::move(x)});
  }

  NmOutcome out;
  const auto by_f = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  std::vector<double> centroid(n), xr(n), xt(n);
  for (int iter = 0; iter < max_iterations; ++iter) {
    std::sort(s.begin(), s.end(), by_f);
    if (s.back().f - s.front().f < tolerance) {
      out.converged = true;
      break;
    }
    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += s[i].x[k] / n;
    Vertex& worst = s.back();

    for (std::size_t k = 0; k < n; ++k) xr[k] = centroid[k] + (centroid[k] - worst.x[k]);
    const double fr = f(xr);
    if (fr < s.front().f) {
      for (std::size_t k = 0; k < n; ++k) xt[k] = centroid[k] + 2.0 * (centroid[k] - worst.x[k]);
      const double fe = f(xt);
      if (fe < fr)
        worst = {fe, xt};
      else
        worst = {fr, xr};
    } else if (fr < s[n - 1].f) {
      worst = {fr, xr};
    } else {
      const bool outside = fr < worst.f;
      const std::vector<double>& anchor = outside ? xr : worst.x;
      for (std::size_t k = 0; k < n; ++k) xt[k] = centroid[k] + 0.5 * (anchor[k] - centroid[k]);
      const double fc = f(xt);
      if (fc < std::min(fr, worst.f)) {
        worst = {fc, xt};
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t k = 0; k < n; ++k)
            s[i].x[k] = s[0].x[k] + 0.5 * (s[i].x[k] - s[0].x[k]);
          s[i].f = f(s[i].x);
        }
      }
    }
  }
  std::sort(s.begin(), s.end(), by_f);
  out.x = s.front().x;
  out.fx = s.front().f;
  return out;
}

Backend backend_for_depth(int p) { return p == 1 ? Backend::closed_p1 : Backend::blocks; }

AngleSchedule unflatten(const std::vector<double>& x, int p) {
  return AngleSchedule(std::vector<double>(x.begin(), x.begin() + p),
                       std::vector<double>(x.begin() + p, x.end()));
}

std::vector<double> flatten(const AngleSchedule& a) {
  std::vector<double> x(a.gammas);
  x.insert(x.end(), a.betas.begin(), a.betas.end());
  return x;
}

// energy first, then lexicographically smallest angles on (near-)ties
bool improves(double fx, const std::vector<double>& x, double best_fx,
              const std::vector<double>& best_x) {
  if (fx < best_fx - 1e-12) return true;
  if (fx > best_fx + 1e-12) return false;
  return std::lexicographical_compare(x.begin(), x.end(), best_x.begin(), best_x.end());
}

// Deterministic educated start points, used alongside the random restarts.
// The published optima ramp gamma up and |beta| down across layers, with
// gamma ~ 0.35..0.85 regardless of d, so a fixed ramp lands in that basin.
std::vector<double> ramp_start(int p, double gamma_lo, double gamma_hi, double beta_hi,
                               double beta_lo) {
  std::vector<double> x(static_cast<std::size_t>(2 * p));
  for (int i = 0; i < p; ++i) {
    const double t = p == 1 ? 0.5 : static_cast<double>(i) / (p - 1);
    x[static_cast<std::size_t>(i)] = gamma_lo + (gamma_hi - gamma_lo) * t;
    x[static_cast<std::size_t>(p + i)] = -(beta_hi + (beta_lo - beta_hi) * t);
  }
  return x;
}

// At strong fields the deep minima sit at the field resonance
// 2 h gamma / sqrt(d) ~ pi/2 (spins rotated against the field); seed it so
// large-d runs do not get lost in the huge default box.
std::vector<double> resonance_start(const TreeProblem& problem) {
  const double scale = std::numbers::pi * std::sqrt(static_cast<double>(problem.d)) /
                       (4.0 * std::abs(problem.h));
  return ramp_start(problem.p, 0.7 * scale, scale, std::numbers::pi / 4.0,
                    std::numbers::pi / 8.0);
}

// stretch or shrink a length-q angle vector to length p by linear
// interpolation of the schedule shape
std::vector<double> interpolate_schedule(const std::vector<double>& v, int p) {
  const int q = static_cast<int>(v.size());
  std::vector<double> out(static_cast<std::size_t>(p));
  if (q == 1) {
    std::fill(out.begin(), out.end(), v[0]);
    return out;
  }
  for (int i = 0; i < p; ++i) {
    const double pos = p == 1 ? 0.0 : static_cast<double>(i) * (q - 1) / (p - 1);
    const int lo = std::min(static_cast<int>(pos), q - 2);
    const double frac = pos - lo;
    out[static_cast<std::size_t>(i)] =
        v[static_cast<std::size_t>(lo)] +
        frac * (v[static_cast<std::size_t>(lo) + 1] - v[static_cast<std::size_t>(lo)]);
  }
  return out;
}

}  // namespace

void OptimizationConfig::validate(int p) const {
  if (restarts < 0) throw std::invalid_argument("OptimizationConfig: negative restarts");
  if (max_iterations < 1) throw std::invalid_argument("OptimizationConfig: max_iterations < 1");
  if (!(simplex_tolerance > 0.0))
    throw std::invalid_argument("OptimizationConfig: simplex_tolerance must be positive");
  if (!search_box.empty()) {
    if (static_cast<int>(search_box.size()) != 2 * p)
      throw std::invalid_argument("OptimizationConfig: search_box needs 2p (lo,hi) pairs");
    for (const auto& [lo, hi] : search_box)
      if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
        throw std::invalid_argument("OptimizationConfig: bad search_box interval");
  }
  if (warm_start) {
    warm_start->validate();
    if (warm_start->depth() != p)
      throw std::invalid_argument("OptimizationConfig: warm_start depth mismatch");
  }
}

std::vector<std::pair<double, double>> default_search_box(int d, int p) {
  if (d < 3 || p < 1) throw std::invalid_argument("default_search_box: need d >= 3, p >= 1");
  std::vector<std::pair<double, double>> box;
  box.reserve(static_cast<std::size_t>(2 * p));
  const double gamma_hi = std::numbers::pi * std::sqrt(static_cast<double>(d)) / 2.0;
  for (int i = 0; i < p; ++i) box.push_back({0.0, gamma_hi});
  for (int i = 0; i < p; ++i) box.push_back({-std::numbers::pi / 2.0, std::numbers::pi / 2.0});
  return box;
}

std::vector<double> fd_gradient(const TreeProblem& problem, const AngleSchedule& angles,
                                double step) {
  angles.validate_for(problem);
  const int p = angles.depth();
  const Backend backend = backend_for_depth(p);
  std::vector<double> g(static_cast<std::size_t>(2 * p));
  for (int i = 0; i < 2 * p; ++i) {
    AngleSchedule hi = angles, lo = angles;
    double& up = i < p ? hi.gammas[static_cast<std::size_t>(i)]
                       : hi.betas[static_cast<std::size_t>(i - p)];
    double& dn = i < p ? lo.gammas[static_cast<std::size_t>(i)]
                       : lo.betas[static_cast<std::size_t>(i - p)];
    up += step;
    dn -= step;
    g[static_cast<std::size_t>(i)] =
        (energy_density(problem, hi, backend) - energy_density(problem, lo, backend)) /
        (2.0 * step);
  }
  return g;
}

double fd_gradient_norm(const TreeProblem& problem, const AngleSchedule& angles, double step) {
  double s = 0.0;
  for (const double g : fd_gradient(problem, angles, step)) s += g * g;
  return std::sqrt(s);
}

OptimizationResult optimize(const TreeProblem& problem, const OptimizationConfig& config) {
  problem.validate();
  const int p = problem.p;
  config.validate(p);
  const auto box = config.search_box.empty() ? default_search_box(problem.d, p)
                                             : config.search_box;
  const Backend backend = backend_for_depth(p);
  const Objective eval = [&](const std::vector<double>& x) {
    return energy_density(problem, unflatten(x, p), backend);
  };

  std::vector<double> step(static_cast<std::size_t>(2 * p));
  for (std::size_t i = 0; i < step.size(); ++i) step[i] = 0.05 * (box[i].second - box[i].first);

  // start queue: warm start, educated deterministic starts, then random draws
  std::vector<std::vector<double>> starts;
  if (config.warm_start) starts.push_back(flatten(*config.warm_start));
  starts.push_back(ramp_start(p, 0.35, 0.55, 0.6, 0.15));
  if (std::abs(problem.h) > 1e-9) starts.push_back(resonance_start(problem));
  const int restarts = std::max(config.effective_restarts(p), static_cast<int>(starts.size()));
  for (int r = static_cast<int>(starts.size()); r < restarts; ++r) {
    SplitMix64 rng(child_seed(config.seed, static_cast<std::uint64_t>(r)));
    std::vector<double> x0(static_cast<std::size_t>(2 * p));
    for (std::size_t i = 0; i < x0.size(); ++i) x0[i] = rng.uniform(box[i].first, box[i].second);
    starts.push_back(std::move(x0));
  }

  NmOutcome best;
  std::vector<double> best_x;
  int converged = 0;
  for (const auto& x0 : starts) {
    NmOutcome out = nelder_mead(eval, x0, step, config.max_iterations, config.simplex_tolerance);
    if (out.converged) ++converged;
    if (best_x.empty() || improves(out.fx, out.x, best.fx, best_x)) {
      best = std::move(out);
      best_x = best.x;
    }
  }

  // polish from the incumbent with shrinking simplices until the energy is
  // stationary to finite differences
  std::vector<double> polish_step = step;
  for (int round = 0; round < 6; ++round) {
    if (fd_gradient_norm(problem, unflatten(best.x, p)) <= 5e-5) break;
    for (double& x : polish_step) x *= 0.2;
    NmOutcome out =
        nelder_mead(eval, best.x, polish_step, config.max_iterations, config.simplex_tolerance);
    if (improves(out.fx, out.x, best.fx, best_x)) {
      best = std::move(out);
      best_x = best.x;
    }
  }

  OptimizationResult res;
  res.best_angles = unflatten(best.x, p);
  res.best_energy = best.fx;
  res.restarts_converged = converged;
  res.gradient_norm_estimate = fd_gradient_norm(problem, res.best_angles);
  return res;
}

std::vector<OptimizationResult> warm_start_ladder(const TreeProblem& problem, int p_max,
                                                  const OptimizationConfig& config) {
  problem.validate();
  if (p_max < 1) throw std::invalid_argument("warm_start_ladder: p_max must be >= 1");
  if (!config.search_box.empty())
    throw std::invalid_argument("warm_start_ladder: per-depth default boxes only");

  std::vector<OptimizationResult> out;
  out.reserve(static_cast<std::size_t>(p_max));
  for (int p = 1; p <= p_max; ++p) {
    TreeProblem sub = problem;
    sub.p = p;
    OptimizationConfig c = config;
    c.seed = child_seed(config.seed, static_cast<std::uint64_t>(p));
    c.warm_start.reset();
    if (p > 1) {
      const AngleSchedule& prev = out.back().best_angles;
      // zero-padding reproduces the depth p-1 optimum exactly, so energies
      // cannot increase with p
      AngleSchedule padded = prev;
      padded.gammas.push_back(0.0);
      padded.betas.push_back(0.0);
      c.warm_start = padded;
    }
    OptimizationResult res = optimize(sub, c);
    if (p > 1) {
      // second warm start: interpolate the previous schedule shape
      OptimizationConfig ci = config;
      ci.seed = child_seed(config.seed, 1000 + static_cast<std::uint64_t>(p));
      ci.restarts = 1;
      const AngleSchedule& prev = out.back().best_angles;
      ci.warm_start = AngleSchedule(interpolate_schedule(prev.gammas, p),
                                    interpolate_schedule(prev.betas, p));
      OptimizationResult alt = optimize(sub, ci);
      if (improves(alt.best_energy, flatten(alt.best_angles), res.best_energy,
                   flatten(res.best_angles)))
        res = alt;
    }
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<std::pair<double, OptimizationResult>> sweep_field(
    int d, int p, const std::vector<double>& h_grid, const OptimizationConfig& config) {
  if (h_grid.empty()) throw std::invalid_argument("sweep_field: empty grid");
  if (!std::is_sorted(h_grid.begin(), h_grid.end()))
    throw std::invalid_argument("sweep_field: h_grid must be sorted ascending");

  std::vector<std::pair<double, OptimizationResult>> out;
  out.reserve(h_grid.size());
  for (std::size_t i = 0; i < h_grid.size(); ++i) {
    TreeProblem problem{d, h_grid[i], p};
    OptimizationConfig c = config;
    c.seed = child_seed(config.seed, i);
    if (i > 0) {
      c.warm_start = out.back().second.best_angles;
      // default mode tracks the smooth branch: continue from the neighbor
      // plus the deterministic educated starts, no random hops
      if (config.restarts == 0) c.restarts = 1;
    }
    out.push_back({h_grid[i], optimize(problem, c)});
  }
  return out;
}

}  // namespace treeqaoa
