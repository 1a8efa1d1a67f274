"""Command-line front end: seeded runs, trial batches, complexity timing,
and the function catalogue.

Config precedence: built-in defaults, then dimension-conditional defaults
(budget and gain power switch at D=20), then explicit flags, then
``--set key=value`` overrides in the order given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import fields as dataclass_fields
from pathlib import Path

import numpy as np

from . import benchmarks, harness
from .engine import SabresConfig, run as engine_run
from .rng import RandomStream

__all__ = ["parse_args", "main"]

_INT_FIELDS = {"n", "m", "tau_e", "er_interval", "max_fes"}
_BOOL_FIELDS = {"predict_diffusion"}
_CONFIG_FIELDS = {f.name for f in dataclass_fields(SabresConfig)}


def _dim_defaults(dim: int) -> dict:
    if dim == 20:
        return {"p": 0.7, "max_fes": 1_000_000}
    return {"p": 0.62, "max_fes": 200_000}


def _parse_set_value(key: str, raw: str):
    if key in _INT_FIELDS:
        return int(raw)
    if key in _BOOL_FIELDS:
        lowered = raw.lower()
        if lowered in ("1", "true", "yes", "on"):
            return True
        if lowered in ("0", "false", "no", "off"):
            return False
        raise ValueError(f"expected a boolean for {key}, got {raw!r}")
    if key == "gamma":
        values = [float(tok) for tok in raw.split(",")]
        return values[0] if len(values) == 1 else np.array(values)
    return float(raw)


def build_config(dim: int, args: argparse.Namespace) -> SabresConfig:
    settings = _dim_defaults(dim)
    if getattr(args, "max_fes", None) is not None:
        settings["max_fes"] = args.max_fes
    if getattr(args, "target_error", None) is not None:
        settings["target_error"] = args.target_error
    for item in getattr(args, "set", None) or []:
        if "=" not in item:
            raise ValueError(f"--set expects key=value, got {item!r}")
        key, raw = item.split("=", 1)
        if key not in _CONFIG_FIELDS:
            raise ValueError(
                f"unknown config field {key!r}; valid fields: {', '.join(sorted(_CONFIG_FIELDS))}"
            )
        settings[key] = _parse_set_value(key, raw)
    config = SabresConfig(**settings)
    config.validate(dim)
    return config


def _add_common(sub: argparse.ArgumentParser, with_runs: bool) -> None:
    sub.add_argument("--function", default="f1", help="function id (see list-functions)")
    sub.add_argument("--dim", type=int, default=10)
    sub.add_argument("--seed", type=int, default=1, help="base seed")
    sub.add_argument("--instance", type=int, default=0, help="transform instance number")
    sub.add_argument("--transform-file", default=None, help="transform data file override")
    sub.add_argument("--max-fes", type=int, default=None, help="evaluation budget")
    sub.add_argument("--target-error", type=float, default=None, help="stopping error")
    sub.add_argument(
        "--set",
        action="append",
        metavar="KEY=VALUE",
        help="override any config field (repeatable)",
    )
    sub.add_argument(
        "--out-dir",
        default=os.environ.get("SABRES_OUT_DIR", "results"),
        help="output directory (default: $SABRES_OUT_DIR or ./results)",
    )
    if with_runs:
        sub.add_argument("--runs", type=int, default=30)
        sub.add_argument("--workers", type=int, default=0, help="process pool size (0 = serial)")


def parse_args(argv=None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="sabres",
        description="Evolutionary optimizer with repulsive mutation: runs, trials, timing.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    _add_common(commands.add_parser("run", help="single optimization run"), with_runs=False)
    _add_common(commands.add_parser("trials", help="seeded batch with statistics"), with_runs=True)

    complexity = commands.add_parser("complexity", help="runtime complexity measurement")
    complexity.add_argument("--dims", type=int, nargs="+", default=[10, 20])
    complexity.add_argument(
        "--out-dir", default=os.environ.get("SABRES_OUT_DIR", "results")
    )

    commands.add_parser("list-functions", help="print the function catalogue")
    args = parser.parse_args(argv)
    args._parser = parser
    return args


def _make_spec(args: argparse.Namespace, parser: argparse.ArgumentParser):
    try:
        return benchmarks.make_objective(
            args.function, args.dim, instance=args.instance, transform_path=args.transform_file
        )
    except ValueError as exc:
        parser.error(str(exc))


def _cmd_run(args, parser) -> int:
    spec = _make_spec(args, parser)
    try:
        config = build_config(args.dim, args)
    except ValueError as exc:
        parser.error(str(exc))
    result = engine_run(config, spec, RandomStream(args.seed))
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    payload = {
        "function": args.function,
        "dim": args.dim,
        "seed": args.seed,
        "best_error": result.best_error,
        "fes_used": result.fes_used,
        "iterations": result.iterations,
        "terminated": result.terminated,
        "restarts": result.restart_count,
        "best_position": [float(v) for v in result.best_position],
    }
    (out / "run.json").write_text(json.dumps(payload, indent=2) + "\n")
    rows = ["fes,min_error,std_error"]
    rows += [f"{fes},{mn!r},{sd!r}" for fes, mn, sd in result.trace]
    (out / "trace_run_000.csv").write_text("\n".join(rows) + "\n")
    print(
        f"{args.function} D={args.dim} seed={args.seed}: best_error={result.best_error:.6E} "
        f"fes={result.fes_used} {result.terminated}"
    )
    return 0


def _cmd_trials(args, parser) -> int:
    spec = _make_spec(args, parser)
    try:
        config = build_config(args.dim, args)
        results = harness.run_trials(config, spec, args.seed, args.runs, workers=args.workers)
    except ValueError as exc:
        parser.error(str(exc))
    summary = harness.summarize(results)
    harness.write_results(results, summary, args.out_dir, args.function, args.dim)
    reached = sum(1 for r in results if r.terminated == "target_reached")
    header = f"{'Function':<10}{'D':>4}{'Min':>14}{'Max':>14}{'Median':>14}{'Mean':>14}{'Std':>14}"
    row = (
        f"{args.function:<10}{args.dim:>4}{summary.min:>14.4E}{summary.max:>14.4E}"
        f"{summary.median:>14.4E}{summary.mean:>14.4E}{summary.std:>14.4E}"
    )
    print(header)
    print(row)
    print(f"target reached: {reached}/{len(results)}  (results in {args.out_dir})")
    return 0


def _cmd_complexity(args) -> int:
    rows = {}
    print(f"{'D':>4}{'T0 (s)':>12}{'T1 (s)':>12}{'T2^ (s)':>12}{'(T2^-T1)/T0':>14}")
    for dim in args.dims:
        t0, t1, t2_hat, metric = harness.measure_complexity(dim)
        rows[str(dim)] = {"t0": t0, "t1": t1, "t2_hat": t2_hat, "metric": metric}
        print(f"{dim:>4}{t0:>12.4f}{t1:>12.4f}{t2_hat:>12.4f}{metric:>14.4f}")
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "complexity.json").write_text(json.dumps(rows, indent=2) + "\n")
    return 0


def _cmd_list_functions() -> int:
    for fid, description in benchmarks.describe_functions():
        print(f"{fid:<14}{description}")
    return 0


def main(argv=None) -> int:
    args = parse_args(argv)
    parser = args._parser
    try:
        if args.command == "run":
            return _cmd_run(args, parser)
        if args.command == "trials":
            return _cmd_trials(args, parser)
        if args.command == "complexity":
            return _cmd_complexity(args)
        if args.command == "list-functions":
            return _cmd_list_functions()
        parser.error(f"unknown command {args.command!r}")
    except (OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
