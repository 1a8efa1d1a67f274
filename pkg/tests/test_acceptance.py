"""Acceptance battery: end-to-end statistical targets on the benchmark
suite, the exploration ablation, the exhaustive property suite, and the
complexity measurement.  Each check prints one PASS/FAIL line with its
measured numbers so a log shows the whole scoreboard at a glance.

These are statistical targets verified on frozen seed panels; the panels
are part of the contract, so do not change seeds or tolerances casually.
"""

import math
import time

import mpmath
import numpy as np
import pytest

import sabres.engine as eng
from sabres.benchmarks import (
    eval_objective,
    generate_transform,
    make_objective,
    orthogonality_deviation,
    registry_ids,
)
from sabres.cli import main as cli_main
from sabres.engine import (
    RepresentativeSet,
    SabresConfig,
    current_gain,
    directional_update,
    exploratory_update,
    init_population,
    repulsive_drift,
    run,
    step,
)
from sabres.harness import measure_complexity, run_exploration_study, run_trials, summarize
from sabres.rng import RandomStream

BASE_SEED = 42
WORKERS = 8


def report(tag, ok, detail):
    print(f"\n{tag}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"{tag}: {detail}"


def convergence_batch(fid):
    spec = make_objective(fid, 10)
    config = SabresConfig()  # defaults: n=m=10, G0=10, p=0.62, budget 2e5
    start = time.perf_counter()
    results = run_trials(config, spec, BASE_SEED, 30, workers=WORKERS)
    wall = time.perf_counter() - start
    reached = sum(1 for r in results if r.terminated == "target_reached")
    return summarize(results), reached, wall


def test_criterion_1_zakharov_statistics():
    summary, reached, wall = convergence_batch("f1")
    ok = summary.median == 1e-8 and reached >= 20 and wall < 120.0
    report(
        "criterion 1 (zakharov D=10, 30 runs)",
        ok,
        f"median={summary.median:.2E} (need 1.00E-08), reached={reached}/30 (need >=20), "
        f"wall={wall:.1f}s (need <120)",
    )


def test_criterion_2_schaffer_statistics():
    summary, reached, _ = convergence_batch("f3")
    ok = summary.median == 1e-8 and reached >= 15
    report(
        "criterion 2 (schaffer_f7 D=10, 30 runs)",
        ok,
        f"median={summary.median:.2E} (need 1.00E-08), reached={reached}/30 (need >=15)",
    )


def test_criterion_3_levy_statistics():
    summary, reached, _ = convergence_batch("f5")
    ok = summary.median <= 1e-3
    report(
        "criterion 3 (levy D=10, 30 runs)",
        ok,
        f"median={summary.median:.2E} (need <=1.00E-03), reached={reached}/30",
    )


def test_criterion_4_exploration_ablation():
    outcomes = run_exploration_study(base_seed=BASE_SEED, runs=20, workers=WORKERS)
    enabled = sum(o.enabled_reached for o in outcomes)
    disabled = sum(o.disabled_reached for o in outcomes)
    both = [o for o in outcomes if o.enabled_reached and o.disabled_reached]
    fewer = sum(o.enabled_fes < o.disabled_fes for o in both)
    strictly_more = enabled > disabled
    fewer_ok = fewer >= 0.6 * len(both)  # vacuously true when the overlap is empty
    ok = strictly_more and fewer_ok
    report(
        "criterion 4 (exploration ablation, two-basin D=2, 20 seeds)",
        ok,
        f"enabled={enabled}/20 vs disabled={disabled}/20 (need strictly more), "
        f"fewer FEs in {fewer}/{len(both)} overlapping successes (need >=60%)",
    )


# -- criterion 5: exhaustive property suite -----------------------------------


def check_rejection_monotonicity():
    config = SabresConfig(max_fes=10**3 * 100 + 100)
    spec = make_objective("rastrigin", 5)
    stream = RandomStream(BASE_SEED)
    state = init_population(config, spec, stream)
    for _ in range(10**3):
        before = state.fitness.copy()
        step(state, spec, config, stream)
        if not np.all(state.fitness <= before):
            return "fitness increased for some particle"
        if state.positions.min() < spec.lower_bound or state.positions.max() > spec.upper_bound:
            return "position left the box"
    if state.fes_used != 100 + 10**3 * 100:
        return f"FE accounting off: {state.fes_used}"
    return None


def check_repulsion_oracle():
    stream = RandomStream(BASE_SEED + 1)
    for count in range(100):
        n = 2 + count % 3
        dim = 1 + (count // 3) % 2
        config = SabresConfig(n=n, m=2, gamma=1e-300, drift_cap=1e12)
        spec = make_objective("f1", dim)
        state = init_population(config, spec, stream)
        while True:
            positions = stream.uniforms(-90.0, 90.0, (n, 2, dim))
            gaps = np.abs(positions[:, None, 0, :] - positions[None, :, 0, :])
            if (gaps + np.eye(n)[:, :, None]).min() >= 1e-3:
                break
        state.positions = positions
        if state.fes_used != n * 2:
            return "FE accounting off at init"
        reps = RepresentativeSet(picks=np.zeros(n, dtype=int))
        got = exploratory_update(state, reps, config, stream)
        for i in range(n):
            for d in range(dim):
                drift = sum(
                    1.0 / (positions[i, 0, d] - positions[j, 0, d])
                    for j in range(n)
                    if j != i
                )
                want = min(max(positions[i, 0, d] + drift, -100.0), 100.0)
                if abs(got[i, 0, d] - want) > 1e-12:
                    return f"mismatch at n={n} D={dim} slot ({i},{d})"
        if got.min() < -100.0 or got.max() > 100.0:
            return "proposal left the box"
    return None


def check_drift_antisymmetry():
    stream = RandomStream(BASE_SEED + 2)
    for _ in range(1000):
        n = int(stream.integers(2, 9))
        xs = stream.uniforms(-50.0, 50.0, n)
        total = sum(repulsive_drift(xs, i) for i in range(n))
        if abs(total) > 1e-10:
            return f"drift sum {total:.3e} for n={n}"
    return None


def check_gain_schedule():
    config = SabresConfig(G0=10.0, p=0.62)
    spec = make_objective("f1", 10)
    state = init_population(config, spec, RandomStream(BASE_SEED + 3))
    mpmath.mp.dps = 50
    taus = sorted({int(round(10 ** (e / 12.0))) for e in range(0, 73)})
    for tau in taus:
        state.tau = tau
        want = float(mpmath.mpf(10) / mpmath.power(tau, mpmath.mpf("0.62")))
        got = current_gain(state, config)
        if not math.isclose(got, want, rel_tol=1e-12):
            return f"gain off at tau={tau}: {got!r} vs {want!r}"
    previous = math.inf
    for tau in range(1, 5001):
        state.tau = tau
        g = current_gain(state, config)
        if not g < previous:
            return f"gain not strictly decreasing at tau={tau}"
        previous = g
    return None


def check_transform_properties():
    stream = RandomStream(BASE_SEED + 4)
    for dim in (2, 10, 20):
        for _ in range(100):
            t = generate_transform(stream, dim)
            if orthogonality_deviation(t.rotation) > 1e-10:
                return f"rotation deviation above 1e-10 at D={dim}"
    for fid in registry_ids():
        dim = 2 if fid == "two-basin" else 10
        spec = make_objective(fid, dim)
        at_opt = eval_objective(spec, spec.optimizer())
        if abs(at_opt - spec.f_star) > 1e-12:
            return f"{fid}: objective at shift {at_opt!r} != f_star {spec.f_star!r}"
    return None


def check_csv_determinism(tmp_path):
    dirs = [tmp_path / "a", tmp_path / "b"]
    for d in dirs:
        argv = [
            "trials", "--function", "f4", "--dim", "5", "--seed", "123",
            "--runs", "5", "--max-fes", "3000", "--set", "n=5", "--set", "m=4",
            "--out-dir", str(d),
        ]
        if cli_main(argv) != 0:
            return "trials invocation failed"
    for name in ["results.csv", "summary.json"] + [f"trace_run_{i:03d}.csv" for i in range(5)]:
        if (dirs[0] / name).read_bytes() != (dirs[1] / name).read_bytes():
            return f"{name} differs between identical invocations"
    return None


def check_fe_and_bounds_accounting():
    config = SabresConfig(n=6, m=4, er_interval=3, er_prob=1.0, er_var_ratio=0.0, gamma=30.0)
    spec = make_objective("f4", 3)
    stream = RandomStream(BASE_SEED + 5)
    state = init_population(config, spec, stream)
    if state.fes_used != 24:
        return "init FE count wrong"
    for k in range(300):
        step(state, spec, config, stream)
        if state.fes_used != 24 * (k + 2):
            return f"FE count wrong after step {k + 1}"
        if state.positions.min() < spec.lower_bound or state.positions.max() > spec.upper_bound:
            return f"bounds violated after step {k + 1}"
        if not np.isfinite(state.fitness).all():
            return "non-finite fitness"
    return None


def test_criterion_5_property_suite(tmp_path):
    checks = [
        ("rejection monotonicity", check_rejection_monotonicity),
        ("repulsion oracle", check_repulsion_oracle),
        ("drift antisymmetry", check_drift_antisymmetry),
        ("gain schedule", check_gain_schedule),
        ("transform properties", check_transform_properties),
        ("csv determinism", lambda: check_csv_determinism(tmp_path)),
        ("FE/bounds accounting", check_fe_and_bounds_accounting),
    ]
    failures = []
    for name, fn in checks:
        try:
            problem = fn()
        except Exception as exc:  # a crashed check is a failed check
            problem = f"raised {type(exc).__name__}: {exc}"
        if problem is not None:
            failures.append(f"{name}: {problem}")
    detail = "; ".join(failures) if failures else f"all {len(checks)} properties hold"
    report("criterion 5 (property suite)", not failures, detail)


def test_criterion_6_complexity_scaling():
    r10 = measure_complexity(10)
    r20 = measure_complexity(20)
    ok = r20.metric >= r10.metric
    report(
        "criterion 6 (complexity)",
        ok,
        f"D=10: (T0={r10.t0:.3f}, T1={r10.t1:.3f}, T2^={r10.t2_hat:.3f}, metric={r10.metric:.3f})  "
        f"D=20: (T0={r20.t0:.3f}, T1={r20.t1:.3f}, T2^={r20.t2_hat:.3f}, metric={r20.metric:.3f})  "
        f"(need metric(20) >= metric(10))",
    )
