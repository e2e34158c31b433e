"""Experiment grids, ratio reports and invariant suites."""

from .config import load_config, parse_config
from .experiment import (
    ExperimentConfig,
    InstanceSource,
    RatioReport,
    SolveCache,
    run_experiment,
)
from .report import emit_table
from .suites import SUITES, SuiteResult, verify_suite

__all__ = [
    "ExperimentConfig",
    "InstanceSource",
    "RatioReport",
    "SUITES",
    "SolveCache",
    "SuiteResult",
    "emit_table",
    "load_config",
    "parse_config",
    "run_experiment",
    "verify_suite",
]
