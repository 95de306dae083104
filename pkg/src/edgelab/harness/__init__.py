"""Experiment orchestration: configs, Monte Carlo runs, statistics and CSV output."""

from edgelab.harness import experiments as _experiments  # noqa: F401  registers experiments
from edgelab.harness.config import (
    EXPERIMENT_KINDS,
    ExperimentConfig,
    ExperimentKind,
    build_config,
    config_echo,
    parse_config,
)
from edgelab.harness.csvio import emit_csv, format_cell, render_csv
from edgelab.harness.experiments import (
    run_exact_tails,
    run_flow_compare,
    run_local_law,
    run_tail_mc,
    run_tw_table,
)
from edgelab.harness.registry import ExperimentResult, get_experiment, registered_kinds
from edgelab.harness.stats import (
    LeftTailFit,
    PrefactorFit,
    fit_left_constant,
    fit_prefactor,
    two_sample_difference,
    wilson_interval,
)

__all__ = [
    "EXPERIMENT_KINDS",
    "ExperimentConfig",
    "ExperimentKind",
    "ExperimentResult",
    "LeftTailFit",
    "PrefactorFit",
    "build_config",
    "config_echo",
    "emit_csv",
    "fit_left_constant",
    "fit_prefactor",
    "format_cell",
    "get_experiment",
    "parse_config",
    "registered_kinds",
    "render_csv",
    "run_exact_tails",
    "run_flow_compare",
    "run_local_law",
    "run_tail_mc",
    "run_tw_table",
    "two_sample_difference",
    "wilson_interval",
]
