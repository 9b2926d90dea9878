"""Veto-election manipulation solver and experiment harness."""

from ._core import (  # noqa: F401
    PRNG_DESCRIPTION,
    CaseLabel,
    CurvePoint,
    FitReport,
    GeneratorSpec,
    HardBoundResult,
    ManipulationInstance,
    ManipulationResult,
    PartitionOutcome,
    PartitionProblem,
    QuadratureOptions,
    SearchStats,
    SweepOverride,
    VetoTarget,
    VoteModel,
    __version__,
    binomial_ci_halfwidth,
    brute_force_manipulation,
    brute_force_partition,
    ckk_decide,
    classify_case,
    cost_curve,
    decide_manipulation,
    estimate_point,
    fit_universal,
    gen_hung,
    gen_hung_one_random,
    gen_normal,
    gen_uniform,
    generate,
    hard_bound,
    kk_heuristic,
    probability_curve,
    reduce_to_partition,
    universal_form,
    validate_spec,
    verify_assignment,
)
