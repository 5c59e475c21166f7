import pytest

import treeqaoa as tq


def test_density_matches_published_point():
    problem = tq.TreeProblem(d=3, h=0.0, p=1)
    angles = tq.AngleSchedule([0.5330], [-0.3927])
    energy = tq.energy_density(problem, angles)
    assert abs(energy - (-1.0 / 3.0)) < 1e-8
    c = tq.correlators(problem, angles, tq.Backend.blocks)
    closed = tq.p1_closed_form(problem, 0.5330, -0.3927)
    assert abs(c.zz - closed.zz) < 1e-12
    assert abs(c.z) < 1e-12


def test_performance_record_and_bounds():
    rec = tq.performance_record(tq.TreeProblem(3, 0.0, 1), -0.3849001787740917, 0.0)
    assert abs(rec.c_p - 0.6924500893870459) < 1e-12
    assert abs(rec.alpha_mc - 0.7493237629986429) < 1e-9
    table = tq.BoundsTable.embedded()
    entry = table.find(3)
    assert entry.c_ub == 0.92410
    assert len(table.content_hash()) == 16
    assert table.find(11) is None


def test_field_helpers():
    assert tq.field_for(tq.ProblemKind.maxcut, 3) == 0.0
    assert tq.field_for(tq.ProblemKind.mis, 3) == 1.0
    assert not tq.mis_field_valid(3, 1.0)
    assert tq.mis_field_valid(3, 2.0)


def test_golden_angles_and_tree_sizes():
    angles = tq.golden_angles(tq.ProblemKind.maxcut, 3, 1)
    assert angles.gammas == [0.5330]
    assert angles.betas == [-0.3927]
    assert tq.has_golden_angles(tq.ProblemKind.mis, 4, 8)
    assert not tq.has_golden_angles(tq.ProblemKind.mis, 5, 1)
    assert tq.tree_sizes(tq.TreeProblem(3, 0.0, 2)) == (14, 10)


def test_optimize_smoke():
    config = tq.OptimizationConfig()
    config.restarts = 2
    res = tq.optimize(tq.TreeProblem(3, 0.0, 1), config)
    assert res.best_energy == pytest.approx(-1.0 / 3.0, abs=1e-6)
    assert res.best_angles.depth == 1
    assert res.gradient_norm_estimate < 1e-3


def test_statevector_against_contraction():
    problem = tq.TreeProblem(3, 1.0, 1)
    angles = tq.AngleSchedule([0.31], [-0.46])
    graph = tq.build_tree_graph(problem, tq.TreeVariant.two_tree)
    assert graph.n == 6
    zz = tq.tree_correlator(problem, angles, tq.TreeVariant.two_tree)
    closed = tq.p1_closed_form(problem, 0.31, -0.46)
    assert abs(zz - closed.zz.real) < 1e-10


def test_graph_and_baselines():
    g = tq.random_regular(12, 3, 7)
    assert g.n == 12 and g.m == 18
    ex = tq.qaoa_expectations(g, 0.0, 3, tq.AngleSchedule([0.5330], [-0.3927]))
    assert 0.5 < ex.exp_cut_fraction < 1.0
    best = tq.brute_force(g, tq.ProblemKind.maxcut)
    assert tq.cut_size(g, best.witness) == int(best.value)
    gw = tq.gw_maxcut(g, 20, 1)
    assert gw.best_cut <= best.value
    assert gw.avg_cut <= gw.best_cut
    mis = tq.greedy_mis(g, 1)
    assert tq.is_independent_set(g, mis)
    pruned = tq.prune(g, [1] * 12, 5)
    assert tq.is_independent_set(g, pruned)


def test_experiment_roundtrip():
    rep = tq.fixed_angle_experiment(
        tq.ProblemKind.maxcut, 3, 1, 12, 3, tq.golden_angles(tq.ProblemKind.maxcut, 3, 1), 9, 10
    )
    assert rep.qaoa.count == 3
    assert len(rep.rows) == 3
    assert rep.qaoa_ratio.mean <= 1.0 + 1e-12
    assert rep.rows[0].optimum is not None


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        tq.TreeProblem(d=2)
    with pytest.raises(tq.CapExceeded):
        deep = tq.TreeProblem(3, 0.0, 9)
        tq.correlators(deep, tq.AngleSchedule([0.1] * 9, [0.1] * 9), tq.Backend.blocks)
    with pytest.raises(IndexError):
        tq.golden_angles(tq.ProblemKind.maxcut, 5, 1)  # std::out_of_range maps to IndexError


def test_sweep_field():
    config = tq.OptimizationConfig()
    config.restarts = 1
    points = tq.sweep_field(3, 1, [0.0, 1.0], config)
    assert [h for h, _ in points] == [0.0, 1.0]
    assert all(res.best_energy < -0.3 for _, res in points)
