"""Asymptotic QAOA on random regular graphs via tree contraction."""

from ._core import (
    AngleSchedule,
    Aggregate,
    Backend,
    BoundEntry,
    BoundsTable,
    BruteForceResult,
    CapExceeded,
    Correlators,
    ExperimentReport,
    Expectations,
    GraphInstance,
    GwResult,
    InstanceRow,
    OptimizationConfig,
    OptimizationResult,
    PerformanceRecord,
    ProblemKind,
    TreeProblem,
    TreeVariant,
    brute_force,
    build_tree_graph,
    correlators,
    cut_fraction,
    cut_size,
    energy_density,
    fd_gradient_norm,
    field_for,
    fixed_angle_experiment,
    golden_angles,
    golden_depths,
    greedy_guarantee,
    greedy_mis,
    gw_guarantee_constant,
    gw_maxcut,
    has_golden_angles,
    independence_ratio,
    is_independent_set,
    mis_energy,
    mis_field_valid,
    optimize,
    p1_closed_form,
    performance_record,
    prune,
    qaoa_expectations,
    random_regular,
    random_sampling_baseline,
    sweep_field,
    tree_correlator,
    tree_sizes,
    warm_start_ladder,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
