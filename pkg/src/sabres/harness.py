"""Trial harness: seeded batches of runs, summary statistics, convergence
traces, result files, and the runtime-complexity measurement."""

from __future__ import annotations

import concurrent.futures
import json
import math
import time
from dataclasses import dataclass
from pathlib import Path
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from . import engine
from .benchmarks import ObjectiveSpec, eval_objective_batch, make_objective
from .engine import EngineState, RunResult, SabresConfig
from .rng import RandomStream, split_seed

__all__ = [
    "TrialResult",
    "TrialSummary",
    "ComplexityResult",
    "AblationOutcome",
    "run_trials",
    "summarize",
    "record_trace",
    "measure_complexity",
    "run_exploration_study",
    "write_results",
]


@dataclass(frozen=True)
class TrialResult:
    run_index: int
    seed: int
    best_error: float
    fes_used: int
    terminated: str  # "target_reached" | "budget_exhausted"
    trace: Tuple[Tuple[int, float, float], ...]


@dataclass(frozen=True)
class TrialSummary:
    min: float
    max: float
    median: float
    mean: float
    std: float


class ComplexityResult(NamedTuple):
    t0: float
    t1: float
    t2_hat: float
    metric: float


def _run_one(args) -> TrialResult:
    config, spec, index, seed = args
    try:
        result = engine.run(config, spec, RandomStream(seed))
    except Exception as exc:
        raise RuntimeError(f"trial {index} (seed {seed}) failed: {exc}") from exc
    return TrialResult(
        run_index=index,
        seed=seed,
        best_error=result.best_error,
        fes_used=result.fes_used,
        terminated=result.terminated,
        trace=result.trace,
    )


def run_trials(
    config: SabresConfig,
    spec: ObjectiveSpec,
    base_seed: int,
    runs: int,
    workers: int = 0,
) -> List[TrialResult]:
    """Execute ``runs`` independent seeded runs.

    Trial seeds derive deterministically from (base_seed, run_index), so
    the batch is reproducible and independent of scheduling; ``workers``
    > 0 fans trials out over a process pool without changing the output.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    jobs = [(config, spec, i, split_seed(base_seed, i)) for i in range(runs)]
    if workers and workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(job) for job in jobs]
    return sorted(results, key=lambda r: r.run_index)


def summarize(results: Sequence[TrialResult]) -> TrialSummary:
    """Order statistics and moments over the batch's best errors.

    Median is the midpoint average for even counts; std uses the sample
    divisor (runs - 1) and is 0 for a single run.
    """
    if not results:
        raise ValueError("cannot summarize an empty batch")
    errors = np.array([r.best_error for r in results], dtype=float)
    std = float(errors.std(ddof=1)) if errors.size > 1 else 0.0
    return TrialSummary(
        min=float(errors.min()),
        max=float(errors.max()),
        median=float(np.median(errors)),
        mean=float(errors.mean()),
        std=std,
    )


def record_trace(state: EngineState) -> Tuple[int, float, float]:
    """(fes_used, population min error, population error std) right now."""
    return engine.trace_point(state)


class AblationOutcome(NamedTuple):
    seed: int
    enabled_reached: bool
    enabled_fes: int
    disabled_reached: bool
    disabled_fes: int


def run_exploration_study(
    base_seed: int = 42,
    runs: int = 20,
    workers: int = 0,
) -> List[AblationOutcome]:
    """Paired ablation of the exploration trigger on the two-basin instance.

    Runs a small population (4 trajectories x 2 realizations, D=2) on the
    two-rastrigin composition with the trigger probability at 0.5 versus 0,
    holding everything else fixed, including the per-run seeds.  A cluster
    that condenses into the decoy basin freezes in one of its wells, and
    only the repulsion kicks fired by the trigger can move it between
    wells, so the pairing isolates what the trigger buys.

    The trigger window cadence is tightened (interval 50) and the kick
    noise widened to the well spacing (gamma 10); at the stock defaults
    a 2e5-FE run at this population size would see well under one window
    on average.
    """
    spec = make_objective("two-basin", 2)
    arms = []
    for er_prob in (0.5, 0.0):
        config = SabresConfig(
            n=4,
            m=2,
            G0=1.0,
            p=0.7,
            er_prob=er_prob,
            er_interval=50,
            er_var_ratio=0.5,
            gamma=10.0,
            max_fes=200_000,
        )
        arms.append(run_trials(config, spec, base_seed, runs, workers=workers))
    enabled, disabled = arms
    return [
        AblationOutcome(
            seed=en.seed,
            enabled_reached=en.terminated == "target_reached",
            enabled_fes=en.fes_used,
            disabled_reached=dis.terminated == "target_reached",
            disabled_fes=dis.fes_used,
        )
        for en, dis in zip(enabled, disabled)
    ]


def _t0_micro_loop(iterations: int = 1_000_000) -> float:
    # Fixed arithmetic/transcendental mix; the affine tail keeps x in a
    # stable range so all one million iterations do identical work.
    start = time.perf_counter()
    x = 0.55
    for _ in range(iterations):
        x = x + x
        x = x / 2.0
        x = x * x
        x = math.sqrt(x)
        x = math.log(x)
        x = math.exp(x)
        x = x / (x + 2.0) + 0.4425
    elapsed = time.perf_counter() - start
    if not math.isfinite(x):
        raise RuntimeError("micro-loop diverged")
    return elapsed


def measure_complexity(
    dim: int,
    stream: Optional[RandomStream] = None,
    evals: int = 200_000,
    t2_runs: int = 5,
    batch: int = 100,
) -> ComplexityResult:
    """Timing triple in the standard benchmark style.

    T0 times the fixed micro-loop; T1 times ``evals`` objective
    evaluations of the first suite function, consumed in engine-sized
    batches; T2_hat is the mean wall time of ``t2_runs`` complete
    optimizer runs over the same evaluation budget.  The metric is
    (T2_hat - T1) / T0.
    """
    if stream is None:
        stream = RandomStream(0)
    spec = make_objective("f1", dim)
    t0 = _t0_micro_loop()

    points = stream.uniforms(spec.lower_bound, spec.upper_bound, size=(batch, dim))
    n_batches = evals // batch
    start = time.perf_counter()
    for _ in range(n_batches):
        eval_objective_batch(spec, points)
    t1 = time.perf_counter() - start

    config = SabresConfig(
        p=0.7 if dim == 20 else 0.62,
        max_fes=evals,
        target_error=1e-9,  # below the error floor, so runs always use the full budget
    )
    times = []
    for r in range(t2_runs):
        run_stream = RandomStream(split_seed(0xC0FFEE, r * 100 + dim))
        start = time.perf_counter()
        engine.run(config, spec, run_stream)
        times.append(time.perf_counter() - start)
    t2_hat = float(np.mean(times))
    return ComplexityResult(t0=t0, t1=t1, t2_hat=t2_hat, metric=(t2_hat - t1) / t0)


def write_results(
    results: Sequence[TrialResult],
    summary: TrialSummary,
    out_dir,
    function_id: str,
    dim: int,
) -> List[Path]:
    """Write results.csv, summary.json, and one trace CSV per run.

    Floats are serialized with repr round-trip precision so parsing the
    files back reproduces the exact values.
    """
    if not results:
        raise ValueError("cannot write an empty batch")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: List[Path] = []

    csv_path = out / "results.csv"
    lines = ["function,dim,run,seed,fes_used,best_error,terminated"]
    for r in results:
        lines.append(
            f"{function_id},{dim},{r.run_index},{r.seed},{r.fes_used},"
            f"{r.best_error!r},{r.terminated}"
        )
    csv_path.write_text("\n".join(lines) + "\n")
    written.append(csv_path)

    summary_path = out / "summary.json"
    payload = {
        "function": function_id,
        "dim": dim,
        "runs": len(results),
        "target_reached": sum(1 for r in results if r.terminated == "target_reached"),
        "min": summary.min,
        "max": summary.max,
        "median": summary.median,
        "mean": summary.mean,
        "std": summary.std,
    }
    summary_path.write_text(json.dumps(payload, indent=2) + "\n")
    written.append(summary_path)

    for r in results:
        trace_path = out / f"trace_run_{r.run_index:03d}.csv"
        rows = ["fes,min_error,std_error"]
        rows += [f"{fes},{mn!r},{sd!r}" for fes, mn, sd in r.trace]
        trace_path.write_text("\n".join(rows) + "\n")
        written.append(trace_path)
    return written
