"""Evolutionary global optimizer with stochastic-approximation updates and
Brownian repulsion, bundled with a CEC-2022-style benchmark suite and a
reproducible trial harness."""

from .benchmarks import (
    ERROR_FLOOR,
    ObjectiveSpec,
    TransformData,
    eval_base,
    eval_objective,
    eval_objective_batch,
    error_value,
    make_objective,
    registry_ids,
)
from .engine import EngineState, RunResult, SabresConfig, run
from .harness import (
    TrialResult,
    TrialSummary,
    measure_complexity,
    run_exploration_study,
    run_trials,
    summarize,
)
from .rng import RandomStream, new_stream, split_seed

__version__ = "0.1.0"

__all__ = [
    "ERROR_FLOOR",
    "ObjectiveSpec",
    "TransformData",
    "eval_base",
    "eval_objective",
    "eval_objective_batch",
    "error_value",
    "make_objective",
    "registry_ids",
    "EngineState",
    "RunResult",
    "SabresConfig",
    "run",
    "TrialResult",
    "TrialSummary",
    "measure_complexity",
    "run_exploration_study",
    "run_trials",
    "summarize",
    "RandomStream",
    "new_stream",
    "split_seed",
]
