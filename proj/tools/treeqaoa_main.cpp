// Command line front end: emits the asymptotic-QAOA data products as CSV or
// JSON.  Exit codes: 0 ok, 2 validation error, 3 resource cap exceeded.
// TREEQAOA_THREADS controls worker threads inside the engines (default 1);
// results are bit-identical for any thread count.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treeqaoa/angle_table.hpp"
#include "treeqaoa/baselines.hpp"
#include "treeqaoa/experiment.hpp"
#include "treeqaoa/metrics.hpp"
#include "treeqaoa/optimizer.hpp"
#include "treeqaoa/tree_engine.hpp"

using nlohmann::json;
using namespace treeqaoa;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

void write_out(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << content;
}

BoundsTable load_bounds(const std::string& path) {
  return path.empty() ? BoundsTable::embedded() : BoundsTable::from_file(path);
}

// two provenance comment lines shared by all CSV outputs
std::string csv_header(const std::string& schema, const json& config, const BoundsTable& bounds) {
  std::ostringstream out;
  out << "# schema: " << schema << "\n";
  out << "# config: " << config.dump() << "\n";
  out << "# bounds_hash: " << bounds.content_hash() << "\n";
  return out.str();
}

json angles_json(const AngleSchedule& a) {
  return json{{"gamma", a.gammas}, {"beta", a.betas}};
}

json aggregate_json(const Aggregate& a) {
  return json{{"mean", a.mean}, {"sem", a.sem}, {"band3", 3.0 * a.sem}, {"count", a.count}};
}

struct CommonOpts {
  std::string out;
  std::string bounds_path;
  std::uint64_t seed = 1;
  int restarts = 0;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool optimizing) {
  cmd->add_option("-o,--out", c.out, "output file (default: stdout)");
  cmd->add_option("--bounds", c.bounds_path, "bounds JSON file overriding the embedded asset");
  if (optimizing) {
    cmd->add_option("--seed", c.seed, "master seed for optimizer restarts")
        ->capture_default_str();
    cmd->add_option("--restarts", c.restarts, "restarts per optimization (0 = auto)")
        ->capture_default_str();
  }
}

OptimizationConfig opt_config(const CommonOpts& c) {
  OptimizationConfig cfg;
  cfg.seed = c.seed;
  cfg.restarts = c.restarts;
  return cfg;
}

// ---------------------------------------------------------------- density

struct DensityOpts {
  int d = 3;
  double h = 0.0;
  int p = 1;
  std::vector<double> gammas, betas;
  std::string backend = "blocks";
  CommonOpts common;
};

void run_density(const DensityOpts& o) {
  const TreeProblem problem{o.d, o.h, o.p};
  const AngleSchedule angles{o.gammas, o.betas};
  const Backend backend = backend_from_string(o.backend);
  const BoundsTable& bounds = load_bounds(o.common.bounds_path);

  const Correlators c = correlators(problem, angles, backend);
  const double energy = energy_density(problem, angles, backend);
  const PerformanceRecord rec = performance_record(problem, c.zz.real(), c.z.real(), bounds);

  json out{
      {"schema", "treeqaoa.density.v1"},
      {"config",
       {{"command", "density"},
        {"d", o.d},
        {"h", o.h},
        {"p", o.p},
        {"gamma", o.gammas},
        {"beta", o.betas},
        {"backend", o.backend}}},
      {"bounds_hash", bounds.content_hash()},
      {"zz", {{"re", c.zz.real()}, {"im", c.zz.imag()}}},
      {"z", {{"re", c.z.real()}, {"im", c.z.imag()}}},
      {"energy_density", energy},
      {"c_p", rec.c_p},
      {"r_p", rec.r_p},
      {"mis_field_valid", rec.mis_valid},
  };
  if (rec.alpha_mc) out["alpha_mc"] = *rec.alpha_mc;
  if (rec.alpha_mis) out["alpha_mis"] = *rec.alpha_mis;
  write_out(o.common.out, out.dump(2) + "\n");
}

// ------------------------------------------------------------------ sweep

struct SweepOpts {
  int d = 3;
  int p = 1;
  double h_min = 0.0;
  double h_max = 4.5;
  int steps = 50;
  CommonOpts common;
};

void run_sweep(const SweepOpts& o) {
  if (o.steps < 2) throw std::invalid_argument("sweep: need steps >= 2");
  const BoundsTable& bounds = load_bounds(o.common.bounds_path);

  std::vector<double> grid(static_cast<std::size_t>(o.steps));
  for (int i = 0; i < o.steps; ++i)
    grid[static_cast<std::size_t>(i)] = o.h_min + (o.h_max - o.h_min) * i / (o.steps - 1);

  const auto points = sweep_field(o.d, o.p, grid, opt_config(o.common));

  const json config{{"command", "sweep"}, {"d", o.d},         {"p", o.p},
                    {"h_min", o.h_min},   {"h_max", o.h_max}, {"steps", o.steps},
                    {"seed", o.common.seed}, {"restarts", o.common.restarts}};
  std::ostringstream out;
  out << csv_header("treeqaoa.sweep.v1", config, bounds);
  out << "h";
  for (int i = 1; i <= o.p; ++i) out << ",gamma_" << i;
  for (int i = 1; i <= o.p; ++i) out << ",beta_" << i;
  out << ",energy,c_p,r_p,alpha_mc,alpha_mis\n";
  for (const auto& [h, res] : points) {
    const TreeProblem problem{o.d, h, o.p};
    const Correlators c = correlators(problem, res.best_angles, Backend::blocks);
    const PerformanceRecord rec = performance_record(problem, c.zz.real(), c.z.real(), bounds);
    out << fmt(h);
    for (const double g : res.best_angles.gammas) out << ',' << fmt(g);
    for (const double b : res.best_angles.betas) out << ',' << fmt(b);
    out << ',' << fmt(res.best_energy) << ',' << fmt(rec.c_p) << ',' << fmt(rec.r_p) << ','
        << fmt(rec.alpha_mc) << ',' << fmt(rec.alpha_mis) << "\n";
  }
  write_out(o.common.out, out.str());
}

// --------------------------------------------------------------- frontier

struct FrontierOpts {
  std::vector<int> d_list;
  int p_max = 3;
  std::string problem = "maxcut";
  CommonOpts common;
};

void run_frontier(const FrontierOpts& o) {
  if (o.d_list.empty()) throw std::invalid_argument("frontier: need at least one d");
  const ProblemKind kind = problem_from_string(o.problem);
  const BoundsTable& bounds = load_bounds(o.common.bounds_path);

  const json config{{"command", "frontier"},  {"d_list", o.d_list},
                    {"p_max", o.p_max},       {"problem", o.problem},
                    {"seed", o.common.seed},  {"restarts", o.common.restarts}};
  std::ostringstream out;
  out << csv_header("treeqaoa.frontier.v1", config, bounds);
  out << "# alpha = c_p/c_ub (maxcut) or r_p/r_ub (mis); random_sampling = 0.5/c_ub\n";
  out << "d,p,value,alpha,alpha_gw,random_sampling,greedy_guarantee,mu_star_lb\n";

  for (const int d : o.d_list) {
    const TreeProblem base{d, field_for(kind, d), 1};
    const auto ladder = warm_start_ladder(base, o.p_max, opt_config(o.common));
    const auto entry = bounds.find(d);
    for (int p = 1; p <= o.p_max; ++p) {
      const TreeProblem problem{d, base.h, p};
      const auto& res = ladder[static_cast<std::size_t>(p - 1)];
      const Correlators c = correlators(problem, res.best_angles, Backend::blocks);
      const PerformanceRecord rec = performance_record(problem, c.zz.real(), c.z.real(), bounds);
      out << d << ',' << p << ',';
      if (kind == ProblemKind::maxcut) {
        std::optional<double> random_alpha;
        if (entry) random_alpha = 0.5 / entry->c_ub;
        out << fmt(rec.c_p) << ',' << fmt(rec.alpha_mc) << ',' << fmt(gw_guarantee_constant())
            << ',' << fmt(random_alpha) << ",,";
        out << fmt(entry ? entry->mu_star_lb : std::nullopt);
      } else {
        out << fmt(rec.r_p) << ',' << fmt(rec.alpha_mis) << ",,," << fmt(greedy_guarantee(d))
            << ',' << fmt(entry ? entry->mu_star_lb : std::nullopt);
      }
      out << "\n";
    }
  }
  write_out(o.common.out, out.str());
}

// ----------------------------------------------------------------- finite

struct FiniteOpts {
  int d = 3;
  int p = 1;
  int n = 16;
  int instances = 50;
  std::string baseline = "gw";
  int roundings = 100;
  std::vector<double> gammas, betas;
  CommonOpts common;
};

void run_finite(const FiniteOpts& o) {
  ProblemKind kind;
  if (o.baseline == "gw")
    kind = ProblemKind::maxcut;
  else if (o.baseline == "greedy")
    kind = ProblemKind::mis;
  else
    throw std::invalid_argument("finite: baseline must be gw or greedy");
  const BoundsTable& bounds = load_bounds(o.common.bounds_path);

  AngleSchedule angles;
  std::string angle_source;
  if (!o.gammas.empty() || !o.betas.empty()) {
    angles = AngleSchedule{o.gammas, o.betas};
    angle_source = "flags";
  } else if (has_golden_angles(kind, o.d, o.p)) {
    angles = golden_angles(kind, o.d, o.p);
    angle_source = "table";
  } else {
    const TreeProblem base{o.d, field_for(kind, o.d), 1};
    angles = warm_start_ladder(base, o.p, opt_config(o.common)).back().best_angles;
    angle_source = "optimized";
  }

  const ExperimentReport rep = fixed_angle_experiment(kind, o.d, o.p, o.n, o.instances, angles,
                                                      o.common.seed, o.roundings);

  json rows = json::array();
  for (const InstanceRow& r : rep.rows) {
    json row{{"seed", r.seed},
             {"qaoa_cut_fraction", r.qaoa_cut_fraction},
             {"qaoa_cut_edges", r.qaoa_cut_edges},
             {"qaoa_independence", r.qaoa_independence}};
    if (r.optimum) row["optimum"] = *r.optimum;
    if (r.baseline) row["baseline"] = *r.baseline;
    if (r.baseline_best) row["baseline_best"] = *r.baseline_best;
    rows.push_back(std::move(row));
  }
  json aggregate{{"qaoa", aggregate_json(rep.qaoa)}, {"baseline", aggregate_json(rep.baseline)}};
  if (rep.optimum) aggregate["optimum"] = aggregate_json(*rep.optimum);
  if (rep.qaoa_ratio) aggregate["qaoa_ratio"] = aggregate_json(*rep.qaoa_ratio);
  if (rep.baseline_ratio) aggregate["baseline_ratio"] = aggregate_json(*rep.baseline_ratio);

  const json out{
      {"schema", "treeqaoa.finite.v1"},
      {"config",
       {{"command", "finite"},
        {"d", o.d},
        {"p", o.p},
        {"n", o.n},
        {"instances", o.instances},
        {"baseline", o.baseline},
        {"roundings", o.roundings},
        {"seed", o.common.seed},
        {"angle_source", angle_source}}},
      {"bounds_hash", bounds.content_hash()},
      {"kind", to_string(kind)},
      {"angles", angles_json(angles)},
      {"aggregate", aggregate},
      {"rows", rows},
  };
  write_out(o.common.out, out.dump(2) + "\n");
}

// ----------------------------------------------------------------- angles

struct AnglesOpts {
  int d = 3;
  double h = 0.0;
  int p_max = 3;
  bool as_json = false;
  CommonOpts common;
};

void run_angles(const AnglesOpts& o) {
  const BoundsTable& bounds = load_bounds(o.common.bounds_path);
  const TreeProblem base{o.d, o.h, 1};
  const auto ladder = warm_start_ladder(base, o.p_max, opt_config(o.common));

  std::vector<AngleTableRow> rows;
  for (int p = 1; p <= o.p_max; ++p)
    rows.push_back({p, ladder[static_cast<std::size_t>(p - 1)].best_angles});

  std::ostringstream title;
  title << "Tree angles for d=" << o.d << ", h=" << fmt(o.h);
  const json config{{"command", "angles"},   {"d", o.d},
                    {"h", o.h},              {"p_max", o.p_max},
                    {"seed", o.common.seed}, {"restarts", o.common.restarts}};

  std::ostringstream out;
  if (o.as_json) {
    json j = json::parse(angle_table_json(rows, title.str()));
    j["schema"] = "treeqaoa.angles.v1";
    j["config"] = config;
    j["bounds_hash"] = bounds.content_hash();
    json energies = json::array();
    for (const auto& res : ladder)
      energies.push_back({{"p", res.best_angles.depth()},
                          {"energy", res.best_energy},
                          {"gradient_norm", res.gradient_norm_estimate}});
    j["energies"] = energies;
    out << j.dump(2) << "\n";
  } else {
    out << "# schema: treeqaoa.angles.v1\n";
    out << "# config: " << config.dump() << "\n";
    out << "# bounds_hash: " << bounds.content_hash() << "\n";
    out << angle_table_text(rows, title.str());
    for (const auto& res : ladder)
      out << "# p=" << res.best_angles.depth() << "  energy= " << fmt(res.best_energy)
          << "  gradient_norm= " << fmt(res.gradient_norm_estimate) << "\n";
  }
  write_out(o.common.out, out.str());
}

struct AnglesShowOpts {
  std::string problem = "maxcut";
  int d = 3;
  bool as_json = false;
  CommonOpts common;
};

void run_angles_show(const AnglesShowOpts& o) {
  const ProblemKind kind = problem_from_string(o.problem);
  const std::vector<int> depths = golden_depths(kind, o.d);
  if (depths.empty())
    throw std::invalid_argument("angles-show: no stored table for " + o.problem + " d=" +
                                std::to_string(o.d));
  std::vector<AngleTableRow> rows;
  for (const int p : depths) rows.push_back({p, golden_angles(kind, o.d, p)});
  std::ostringstream title;
  title << "Tree angles for " << o.problem << " d=" << o.d;
  const std::string body = o.as_json ? angle_table_json(rows, title.str()) + "\n"
                                     : angle_table_text(rows, title.str());
  write_out(o.common.out, body);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asymptotic QAOA on random regular graphs: tree contraction, "
               "tree-angle optimization, and finite-size experiments"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  DensityOpts density;
  auto* cmd_density = app.add_subcommand(
      "density", "correlators and energy density at fixed angles (one JSON object)");
  cmd_density->set_help_flag("--help", "print help and exit");
  cmd_density->add_option("-d,--degree", density.d, "graph regularity d >= 3")->required();
  cmd_density->add_option("-h,--field", density.h, "local field h")->capture_default_str();
  cmd_density->add_option("-p,--depth", density.p, "QAOA depth p")->required();
  cmd_density->add_option("--gamma", density.gammas, "phase angles gamma_1..gamma_p")
      ->required()
      ->delimiter(',');
  cmd_density->add_option("--beta", density.betas, "mixer angles beta_1..beta_p")
      ->required()
      ->delimiter(',');
  cmd_density->add_option("--backend", density.backend, "naive | grown | blocks | closed_p1")
      ->capture_default_str();
  add_common(cmd_density, density.common, false);
  cmd_density->callback([&] { run_density(density); });

  SweepOpts sweep;
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "optimize angles over a local-field grid and emit the metric curves (CSV)");
  cmd_sweep->set_help_flag("--help", "print help and exit");
  cmd_sweep->add_option("-d,--degree", sweep.d, "graph regularity d >= 3")->required();
  cmd_sweep->add_option("-p,--depth", sweep.p, "QAOA depth p")->required();
  cmd_sweep->add_option("--h-min", sweep.h_min, "grid start")->capture_default_str();
  cmd_sweep->add_option("--h-max", sweep.h_max, "grid end")->capture_default_str();
  cmd_sweep->add_option("--steps", sweep.steps, "grid points (>= 2)")->capture_default_str();
  add_common(cmd_sweep, sweep.common, true);
  cmd_sweep->callback([&] { run_sweep(sweep); });

  FrontierOpts frontier;
  auto* cmd_frontier = app.add_subcommand(
      "frontier", "approximation ratio vs depth per regularity, with reference lines (CSV)");
  cmd_frontier->set_help_flag("--help", "print help and exit");
  cmd_frontier->add_option("-d,--degree", frontier.d_list, "regularities to scan")
      ->required()
      ->delimiter(',');
  cmd_frontier->add_option("--p-max", frontier.p_max, "largest QAOA depth")->capture_default_str();
  cmd_frontier->add_option("--problem", frontier.problem, "maxcut | mis")->capture_default_str();
  add_common(cmd_frontier, frontier.common, true);
  cmd_frontier->callback([&] { run_frontier(frontier); });

  FiniteOpts finite;
  auto* cmd_finite = app.add_subcommand(
      "finite", "fixed-tree-angle QAOA vs classical baseline on sampled instances (JSON)");
  cmd_finite->set_help_flag("--help", "print help and exit");
  cmd_finite->add_option("-d,--degree", finite.d, "graph regularity d >= 3")->required();
  cmd_finite->add_option("-p,--depth", finite.p, "QAOA depth p")->required();
  cmd_finite->add_option("-n,--vertices", finite.n, "vertices per instance")->required();
  cmd_finite->add_option("--instances", finite.instances, "number of sampled instances")
      ->capture_default_str();
  cmd_finite->add_option("--baseline", finite.baseline, "gw (maxcut) | greedy (mis)")
      ->capture_default_str();
  cmd_finite->add_option("--roundings", finite.roundings, "hyperplane roundings per gw run")
      ->capture_default_str();
  cmd_finite->add_option("--gamma", finite.gammas, "override angles (default: stored table)")
      ->delimiter(',');
  cmd_finite->add_option("--beta", finite.betas, "override angles (default: stored table)")
      ->delimiter(',');
  add_common(cmd_finite, finite.common, true);
  cmd_finite->callback([&] { run_finite(finite); });

  AnglesOpts angles;
  auto* cmd_angles = app.add_subcommand(
      "angles", "optimize the tree-angle ladder p = 1..p_max and write the table");
  cmd_angles->set_help_flag("--help", "print help and exit");
  cmd_angles->add_option("-d,--degree", angles.d, "graph regularity d >= 3")->required();
  cmd_angles->add_option("-h,--field", angles.h, "local field h")->capture_default_str();
  cmd_angles->add_option("--p-max", angles.p_max, "largest QAOA depth")->capture_default_str();
  cmd_angles->add_flag("--json", angles.as_json, "emit JSON instead of the text table");
  add_common(cmd_angles, angles.common, true);
  cmd_angles->callback([&] { run_angles(angles); });

  AnglesShowOpts show;
  auto* cmd_show = app.add_subcommand(
      "angles-show", "print the stored published angle tables (display sign convention)");
  cmd_show->set_help_flag("--help", "print help and exit");
  cmd_show->add_option("--problem", show.problem, "maxcut | mis")->capture_default_str();
  cmd_show->add_option("-d,--degree", show.d, "graph regularity")->capture_default_str();
  cmd_show->add_flag("--json", show.as_json, "emit JSON instead of the text table");
  add_common(cmd_show, show.common, false);
  cmd_show->callback([&] { run_angles_show(show); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
