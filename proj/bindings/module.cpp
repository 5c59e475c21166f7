#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treeqaoa/angle_table.hpp"
#include "treeqaoa/baselines.hpp"
#include "treeqaoa/experiment.hpp"
#include "treeqaoa/metrics.hpp"
#include "treeqaoa/optimizer.hpp"
#include "treeqaoa/statevector.hpp"
#include "treeqaoa/tree_engine.hpp"

namespace py = pybind11;
using namespace treeqaoa;

PYBIND11_MODULE(_core, m) {
  m.doc() = "asymptotic QAOA on random regular graphs (tree contraction core)";

  py::register_exception<CapExceeded>(m, "CapExceeded");

  py::enum_<ProblemKind>(m, "ProblemKind")
      .value("maxcut", ProblemKind::maxcut)
      .value("mis", ProblemKind::mis);

  py::enum_<Backend>(m, "Backend")
      .value("naive", Backend::naive)
      .value("grown", Backend::grown)
      .value("blocks", Backend::blocks)
      .value("closed_p1", Backend::closed_p1);

  py::class_<TreeProblem>(m, "TreeProblem")
      .def(py::init([](int d, double h, int p) {
             TreeProblem t{d, h, p};
             t.validate();
             return t;
           }),
           py::arg("d"), py::arg("h") = 0.0, py::arg("p") = 1)
      .def_readwrite("d", &TreeProblem::d)
      .def_readwrite("h", &TreeProblem::h)
      .def_readwrite("p", &TreeProblem::p)
      .def("validate", &TreeProblem::validate);

  py::class_<AngleSchedule>(m, "AngleSchedule")
      .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("gammas"),
           py::arg("betas"))
      .def_readwrite("gammas", &AngleSchedule::gammas)
      .def_readwrite("betas", &AngleSchedule::betas)
      .def_property_readonly("depth", &AngleSchedule::depth);

  m.def("field_for", &field_for, py::arg("kind"), py::arg("d"), py::arg("lambda_") = 1.0,
        "h = 0 for maxcut, d - 2/lambda for mis");

  py::class_<Correlators>(m, "Correlators")
      .def_readonly("zz", &Correlators::zz)
      .def_readonly("z", &Correlators::z);

  m.def("correlators", &correlators, py::arg("problem"), py::arg("angles"),
        py::arg("backend") = Backend::blocks);
  m.def("energy_density", &energy_density, py::arg("problem"), py::arg("angles"),
        py::arg("backend") = Backend::blocks);
  m.def("p1_closed_form", &p1_closed_form, py::arg("problem"), py::arg("gamma"), py::arg("beta"));
  m.def("tree_sizes",
        [](const TreeProblem& problem) {
          const TreeSizes s = tree_sizes(problem);
          return py::make_tuple(s.two_tree, s.one_tree);
        },
        py::arg("problem"), "(two_tree_vertices, one_tree_vertices)");

  m.def("cut_fraction", &cut_fraction, py::arg("zz"));
  m.def("independence_ratio", &independence_ratio, py::arg("zz"), py::arg("z"), py::arg("d"));
  m.def("mis_field_valid", &mis_field_valid, py::arg("d"), py::arg("h"));
  m.def("gw_guarantee_constant", &gw_guarantee_constant);
  m.def("greedy_guarantee", &greedy_guarantee, py::arg("d"));

  py::class_<BoundEntry>(m, "BoundEntry")
      .def_readonly("c_ub", &BoundEntry::c_ub)
      .def_readonly("r_ub", &BoundEntry::r_ub)
      .def_readonly("mu_star_lb", &BoundEntry::mu_star_lb);

  py::class_<BoundsTable>(m, "BoundsTable")
      .def_static("embedded", &BoundsTable::embedded, py::return_value_policy::reference)
      .def_static("from_file", &BoundsTable::from_file, py::arg("path"))
      .def_static("from_json", &BoundsTable::from_json, py::arg("json_text"))
      .def("find", &BoundsTable::find, py::arg("d"))
      .def("content_hash", &BoundsTable::content_hash);

  py::class_<PerformanceRecord>(m, "PerformanceRecord")
      .def_readonly("d", &PerformanceRecord::d)
      .def_readonly("h", &PerformanceRecord::h)
      .def_readonly("p", &PerformanceRecord::p)
      .def_readonly("energy_density", &PerformanceRecord::energy_density)
      .def_readonly("c_p", &PerformanceRecord::c_p)
      .def_readonly("r_p", &PerformanceRecord::r_p)
      .def_readonly("alpha_mc", &PerformanceRecord::alpha_mc)
      .def_readonly("alpha_mis", &PerformanceRecord::alpha_mis)
      .def_readonly("mis_valid", &PerformanceRecord::mis_valid);

  m.def("performance_record",
        [](const TreeProblem& problem, double zz, double z) {
          return performance_record(problem, zz, z, BoundsTable::embedded());
        },
        py::arg("problem"), py::arg("zz"), py::arg("z"));

  py::class_<OptimizationConfig>(m, "OptimizationConfig")
      .def(py::init<>())
      .def_readwrite("restarts", &OptimizationConfig::restarts)
      .def_readwrite("max_iterations", &OptimizationConfig::max_iterations)
      .def_readwrite("simplex_tolerance", &OptimizationConfig::simplex_tolerance)
      .def_readwrite("seed", &OptimizationConfig::seed)
      .def_readwrite("warm_start", &OptimizationConfig::warm_start)
      .def_readwrite("search_box", &OptimizationConfig::search_box);

  py::class_<OptimizationResult>(m, "OptimizationResult")
      .def_readonly("best_angles", &OptimizationResult::best_angles)
      .def_readonly("best_energy", &OptimizationResult::best_energy)
      .def_readonly("restarts_converged", &OptimizationResult::restarts_converged)
      .def_readonly("gradient_norm_estimate", &OptimizationResult::gradient_norm_estimate);

  m.def("optimize",
        [](const TreeProblem& problem, const OptimizationConfig* config) {
          return optimize(problem, config ? *config : OptimizationConfig{});
        },
        py::arg("problem"), py::arg("config") = nullptr);
  m.def("warm_start_ladder",
        [](const TreeProblem& problem, int p_max, const OptimizationConfig* config) {
          return warm_start_ladder(problem, p_max, config ? *config : OptimizationConfig{});
        },
        py::arg("problem"), py::arg("p_max"), py::arg("config") = nullptr);
  m.def("sweep_field",
        [](int d, int p, const std::vector<double>& h_grid, const OptimizationConfig* config) {
          return sweep_field(d, p, h_grid, config ? *config : OptimizationConfig{});
        },
        py::arg("d"), py::arg("p"), py::arg("h_grid"), py::arg("config") = nullptr);
  m.def("fd_gradient_norm", &fd_gradient_norm, py::arg("problem"), py::arg("angles"),
        py::arg("step") = 1e-5);

  m.def("golden_angles", &golden_angles, py::arg("kind"), py::arg("d"), py::arg("p"),
        py::return_value_policy::copy, "published tree angles, betas in ansatz convention");
  m.def("has_golden_angles", &has_golden_angles, py::arg("kind"), py::arg("d"), py::arg("p"));
  m.def("golden_depths", &golden_depths, py::arg("kind"), py::arg("d"));

  py::class_<GraphInstance>(m, "GraphInstance")
      .def_readonly("n", &GraphInstance::n)
      .def_readonly("edges", &GraphInstance::edges)
      .def_property_readonly("m", &GraphInstance::m);

  py::enum_<TreeVariant>(m, "TreeVariant")
      .value("one_tree", TreeVariant::one_tree)
      .value("two_tree", TreeVariant::two_tree);

  m.def("random_regular", &random_regular, py::arg("n"), py::arg("d"), py::arg("seed"));
  m.def("build_tree_graph", &build_tree_graph, py::arg("problem"), py::arg("variant"));
  m.def("cut_size", &cut_size, py::arg("graph"), py::arg("bits"));
  m.def("is_independent_set", &is_independent_set, py::arg("graph"), py::arg("bits"));
  m.def("mis_energy", &mis_energy, py::arg("graph"), py::arg("bits"), py::arg("lambda_") = 1.0);
  m.def("prune", &prune, py::arg("graph"), py::arg("bits"), py::arg("seed"));

  py::class_<Expectations>(m, "Expectations")
      .def_readonly("mean_zz_per_edge", &Expectations::mean_zz_per_edge)
      .def_readonly("mean_z_per_vertex", &Expectations::mean_z_per_vertex)
      .def_readonly("energy", &Expectations::energy)
      .def_readonly("exp_cut_fraction", &Expectations::exp_cut_fraction)
      .def_readonly("exp_independence_objective", &Expectations::exp_independence_objective);

  m.def("qaoa_expectations",
        [](const GraphInstance& graph, double h, int d_norm, const AngleSchedule& angles) {
          const StateVector state = qaoa_state(graph, h, d_norm, angles);
          return expectations(state, graph, h, d_norm);
        },
        py::arg("graph"), py::arg("h"), py::arg("d_norm"), py::arg("angles"),
        "exact expectations of the QAOA state on an explicit graph");
  m.def("tree_correlator",
        [](const TreeProblem& problem, const AngleSchedule& angles, TreeVariant variant) {
          const GraphInstance g = build_tree_graph(problem, variant);
          const StateVector state = qaoa_state(g, problem.h, problem.d, angles);
          return variant == TreeVariant::two_tree ? edge_zz(state, 0, 1) : vertex_z(state, 0);
        },
        py::arg("problem"), py::arg("angles"), py::arg("variant"),
        "statevector root-edge zz (two_tree) or root z (one_tree)");

  py::class_<BruteForceResult>(m, "BruteForceResult")
      .def_readonly("value", &BruteForceResult::value)
      .def_readonly("witness", &BruteForceResult::witness);
  m.def("brute_force", &brute_force, py::arg("graph"), py::arg("objective"));

  py::class_<GwResult>(m, "GwResult")
      .def_readonly("avg_cut", &GwResult::avg_cut)
      .def_readonly("best_cut", &GwResult::best_cut)
      .def_readonly("best_bits", &GwResult::best_bits)
      .def_readonly("relaxation_converged", &GwResult::relaxation_converged)
      .def_readonly("iterations", &GwResult::iterations)
      .def_readonly("embedding", &GwResult::embedding)
      .def_readonly("rank", &GwResult::rank);
  m.def("gw_maxcut", &gw_maxcut, py::arg("graph"), py::arg("roundings"), py::arg("seed"));
  m.def("greedy_mis", &greedy_mis, py::arg("graph"), py::arg("seed"));
  m.def("random_sampling_baseline", &random_sampling_baseline, py::arg("graph"));

  py::class_<Aggregate>(m, "Aggregate")
      .def_readonly("mean", &Aggregate::mean)
      .def_readonly("sem", &Aggregate::sem)
      .def_readonly("count", &Aggregate::count);

  py::class_<InstanceRow>(m, "InstanceRow")
      .def_readonly("seed", &InstanceRow::seed)
      .def_readonly("qaoa_cut_fraction", &InstanceRow::qaoa_cut_fraction)
      .def_readonly("qaoa_cut_edges", &InstanceRow::qaoa_cut_edges)
      .def_readonly("qaoa_independence", &InstanceRow::qaoa_independence)
      .def_readonly("optimum", &InstanceRow::optimum)
      .def_readonly("baseline", &InstanceRow::baseline)
      .def_readonly("baseline_best", &InstanceRow::baseline_best);

  py::class_<ExperimentReport>(m, "ExperimentReport")
      .def_readonly("kind", &ExperimentReport::kind)
      .def_readonly("d", &ExperimentReport::d)
      .def_readonly("p", &ExperimentReport::p)
      .def_readonly("n", &ExperimentReport::n)
      .def_readonly("instances", &ExperimentReport::instances)
      .def_readonly("seed", &ExperimentReport::seed)
      .def_readonly("gw_roundings", &ExperimentReport::gw_roundings)
      .def_readonly("angles", &ExperimentReport::angles)
      .def_readonly("rows", &ExperimentReport::rows)
      .def_readonly("qaoa", &ExperimentReport::qaoa)
      .def_readonly("baseline", &ExperimentReport::baseline)
      .def_readonly("optimum", &ExperimentReport::optimum)
      .def_readonly("qaoa_ratio", &ExperimentReport::qaoa_ratio)
      .def_readonly("baseline_ratio", &ExperimentReport::baseline_ratio);

  m.def("fixed_angle_experiment", &fixed_angle_experiment, py::arg("kind"), py::arg("d"),
        py::arg("p"), py::arg("n"), py::arg("instances"), py::arg("angles"), py::arg("seed"),
        py::arg("gw_roundings") = 100);
}
