"""Core optimizer: a population of Brownian-motion trajectories refined by
gain-weighted directional updates, with occasional repulsive mutations.

The state machine keeps ``n`` trajectories with ``m`` realizations each.
One step applies, in order:

1. exploration check: at fixed iteration intervals, with small probability
   and only while the population fitness variance has not collapsed, one
   representative realization per trajectory takes a repulsive-drift plus
   Gaussian kick, for a window of ``tau_e`` consecutive iterations;
2. gain restart check: when the decaying gain falls below a floor, the
   base gain is scaled back up (deterministically the first time, by a
   uniform random factor afterwards);
3. directional update: every slot is rebuilt from scrambled slots: a
   base particle drawn through fresh trajectory/realization swaps, moved
   against the gain-weighted innovation between a second swapped
   particle and the slot's own proposal, with per-coordinate swaps
   deciding which coordinates adopt the rebuilt value;
4. rejection sampling: a candidate replaces its particle only if its
   objective value does not worsen, so per-particle fitness is
   non-increasing across the whole run.

All randomness flows through a single RandomStream, so a (seed, config,
problem) triple fully determines a run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .benchmarks import ObjectiveSpec, error_value, error_values, eval_objective_batch
from .rng import RandomStream

__all__ = [
    "SabresConfig",
    "EngineState",
    "RepresentativeSet",
    "RunResult",
    "init_population",
    "current_gain",
    "check_gain_restart",
    "check_exploration_trigger",
    "select_representatives",
    "repulsive_drift",
    "exploratory_update",
    "directional_update",
    "rejection_sample",
    "step",
    "run",
    "trace_point",
    "trace_checkpoints",
]


@dataclass
class SabresConfig:
    """Algorithm parameters.

    ``gamma`` is the per-dimension mutation noise intensity: a vector of
    D positive reals, a scalar broadcast to all dimensions, or None for
    the default of 1% of the box width per dimension.  ``swap_rate`` is
    the probability that a coordinate adopts the rebuilt value in the
    directional update (one coordinate per slot always does).
    ``drift_cap`` bounds the repulsive drift magnitude to that fraction
    of the box width; ``eps_rep`` clamps the pairwise repulsion
    denominator.  ``predict_diffusion`` optionally adds the plain
    diffusion noise to every particle every step (off by default: the
    operative update adds noise only through mutation windows).
    """

    n: int = 10
    m: int = 10
    G0: float = 10.0
    p: float = 0.62
    gamma: object = None
    tau_e: int = 5
    s_g: float = 2.0
    er_interval: int = 1000
    er_prob: float = 0.1
    er_var_ratio: float = 0.5
    et_threshold: float = 0.3
    swap_rate: float = 0.9
    max_fes: int = 200_000
    target_error: float = 1e-8
    eps_rep: float = 1e-8
    drift_cap: float = 0.1
    predict_diffusion: bool = False

    def validate(self, dim: Optional[int] = None) -> None:
        if self.n < 2:
            raise ValueError("n must be >= 2: repulsion needs at least two trajectories")
        if self.m < 2:
            raise ValueError("m must be >= 2: the realization scramble needs a non-self choice")
        if not self.G0 > 0:
            raise ValueError("G0 must be positive")
        if not 0 < self.p <= 1:
            raise ValueError("p must lie in (0, 1]")
        if self.tau_e < 1:
            raise ValueError("tau_e must be >= 1")
        if not self.s_g > 0:
            raise ValueError("s_g must be positive")
        if self.er_interval < 1:
            raise ValueError("er_interval must be >= 1")
        if not 0.0 <= self.er_prob <= 1.0:
            raise ValueError("er_prob must lie in [0, 1]")
        if self.er_var_ratio < 0:
            raise ValueError("er_var_ratio must be non-negative")
        if not self.et_threshold > 0:
            raise ValueError("et_threshold must be positive")
        if not 0.0 < self.swap_rate <= 1.0:
            raise ValueError("swap_rate must lie in (0, 1]")
        if self.max_fes < self.n * self.m:
            raise ValueError("max_fes must cover at least one population evaluation")
        if not self.target_error > 0:
            raise ValueError("target_error must be positive")
        if not self.eps_rep > 0:
            raise ValueError("eps_rep must be positive")
        if not self.drift_cap > 0:
            raise ValueError("drift_cap must be positive")
        if self.gamma is not None:
            g = np.atleast_1d(np.asarray(self.gamma, dtype=float))
            if not (g > 0).all():
                raise ValueError("all gamma entries must be positive")
            if dim is not None and g.size not in (1, dim):
                raise ValueError(f"gamma has {g.size} entries, expected 1 or {dim}")

    def resolved_gamma(self, dim: int, lower: float, upper: float) -> np.ndarray:
        if self.gamma is None:
            return np.full(dim, 0.01 * (upper - lower))
        g = np.atleast_1d(np.asarray(self.gamma, dtype=float))
        if g.size == 1:
            return np.full(dim, float(g[0]))
        return g.copy()


@dataclass
class RepresentativeSet:
    """One realization index per trajectory, picked for mutation."""

    picks: np.ndarray

    def __post_init__(self):
        self.picks = np.asarray(self.picks, dtype=int)


@dataclass
class EngineState:
    """Mutable run state plus the problem constants the updates need."""

    positions: np.ndarray  # (n, m, D)
    fitness: np.ndarray  # (n, m)
    tau: int
    fes_used: int
    gain_base: float
    restart_count: int
    mutation_remaining: int
    var_history: List[float]  # [older, newer]
    best_error: float
    best_position: np.ndarray
    lower_bound: float
    upper_bound: float
    f_star: float
    gamma: np.ndarray
    drift_max: float


@dataclass(frozen=True)
class RunResult:
    best_error: float
    best_position: np.ndarray
    fes_used: int
    iterations: int
    terminated: str  # "target_reached" | "budget_exhausted"
    restart_count: int
    trace: Tuple[Tuple[int, float, float], ...]


def init_population(config: SabresConfig, spec: ObjectiveSpec, stream: RandomStream) -> EngineState:
    """Uniformly seed the population in the box and evaluate it."""
    config.validate(spec.dim)
    lower, upper = spec.lower_bound, spec.upper_bound
    positions = stream.uniforms(lower, upper, size=(config.n, config.m, spec.dim))
    fitness = eval_objective_batch(spec, positions.reshape(-1, spec.dim)).reshape(
        config.n, config.m
    )
    flat = int(np.argmin(fitness))
    i, k = divmod(flat, config.m)
    var0 = float(np.var(fitness))
    return EngineState(
        positions=positions,
        fitness=fitness,
        tau=1,
        fes_used=config.n * config.m,
        gain_base=float(config.G0),
        restart_count=0,
        mutation_remaining=0,
        var_history=[var0, var0],
        best_error=error_value(float(fitness[i, k]), spec.f_star),
        best_position=positions[i, k].copy(),
        lower_bound=lower,
        upper_bound=upper,
        f_star=spec.f_star,
        gamma=config.resolved_gamma(spec.dim, lower, upper),
        drift_max=config.drift_cap * (upper - lower),
    )


def current_gain(state: EngineState, config: SabresConfig) -> float:
    """Step size ``gain_base / tau^p``."""
    return state.gain_base / state.tau**config.p


def check_gain_restart(state: EngineState, config: SabresConfig, stream: RandomStream) -> float:
    """Scale the base gain back up once it decays below the floor.

    The first restart multiplies by ``s_g`` exactly; later restarts
    multiply by a uniform draw between 1 and ``s_g``.
    """
    if current_gain(state, config) >= config.et_threshold:
        return state.gain_base
    if state.restart_count == 0:
        factor = config.s_g
    else:
        factor = stream.uniform(min(1.0, config.s_g), max(1.0, config.s_g))
    state.gain_base *= factor
    state.restart_count += 1
    return state.gain_base


def check_exploration_trigger(
    state: EngineState, config: SabresConfig, stream: RandomStream
) -> bool:
    """Decide whether this step mutates.

    A fresh trigger needs all three gates at once: the iteration counter
    on the check interval, a coin below ``er_prob``, and the newest
    population variance above ``er_var_ratio`` times the one before it.
    A firing opens a window of ``tau_e`` consecutive mutating steps.

    The coin is drawn whenever the interval gate passes, regardless of
    ``er_prob``, so runs differing only in the trigger knobs consume the
    stream identically until a trigger actually fires.
    """
    if state.mutation_remaining > 0:
        state.mutation_remaining -= 1
        return True
    if state.tau % config.er_interval != 0:
        return False
    coin = stream.uniform(0.0, 1.0)
    if not coin < config.er_prob:
        return False
    if not state.var_history[1] > config.er_var_ratio * state.var_history[0]:
        return False
    state.mutation_remaining = config.tau_e - 1
    return True


def select_representatives(config: SabresConfig, stream: RandomStream) -> RepresentativeSet:
    """Pick one realization per trajectory, independently and uniformly."""
    return RepresentativeSet(picks=stream.integers(0, config.m, size=config.n))


def _pair_sign(n: int) -> np.ndarray:
    # sign(0) resolved by trajectory order: term for (i, j) positive when i < j
    idx = np.arange(n)
    return np.where(idx[:, None] < idx[None, :], 1.0, -1.0)


def repulsive_drift(
    positions_1d, i: int, eps_rep: float = 1e-8, drift_max: Optional[float] = None
) -> float:
    """Scalar reference for one coordinate: ``sum_{j != i} 1/(x_i - x_j)``.

    Near-coincident pairs are clamped to ``sign/eps_rep`` and the total
    is capped at ``drift_max`` when given.
    """
    x = np.asarray(positions_1d, dtype=float)
    n = x.size
    if n < 2:
        raise ValueError("repulsion needs at least two trajectories")
    if not 0 <= i < n:
        raise ValueError(f"index {i} out of range for {n} trajectories")
    total = 0.0
    for j in range(n):
        if j == i:
            continue
        d = x[i] - x[j]
        if abs(d) < eps_rep:
            s = math.copysign(1.0, d) if d != 0.0 else (1.0 if i < j else -1.0)
            total += s / eps_rep
        else:
            total += 1.0 / d
    if drift_max is not None:
        total = min(max(total, -drift_max), drift_max)
    return total


def _drift_matrix(rep_positions: np.ndarray, eps_rep: float, drift_max: float) -> np.ndarray:
    # Vectorized repulsive_drift over all trajectories and dimensions at once.
    n = rep_positions.shape[0]
    diff = rep_positions[:, None, :] - rep_positions[None, :, :]  # (n, n, D)
    small = np.abs(diff) < eps_rep
    signs = np.sign(diff)
    signs = np.where(signs == 0.0, _pair_sign(n)[:, :, None], signs)
    terms = np.where(small, signs / eps_rep, 1.0 / np.where(small, 1.0, diff))
    terms[np.arange(n), np.arange(n), :] = 0.0
    drift = terms.sum(axis=1)
    return np.clip(drift, -drift_max, drift_max)


def _mutate(
    base: np.ndarray,
    reps: RepresentativeSet,
    state: EngineState,
    config: SabresConfig,
    stream: RandomStream,
) -> np.ndarray:
    n = base.shape[0]
    proposals = base.copy()
    rows = np.arange(n)
    rep_positions = base[rows, reps.picks, :]  # (n, D)
    drift = _drift_matrix(rep_positions, config.eps_rep, state.drift_max)
    noise = stream.standard_normals((n, rep_positions.shape[1])) * state.gamma
    moved = np.clip(rep_positions + drift + noise, state.lower_bound, state.upper_bound)
    proposals[rows, reps.picks, :] = moved
    return proposals


def exploratory_update(
    state: EngineState,
    reps: RepresentativeSet,
    config: SabresConfig,
    stream: RandomStream,
) -> np.ndarray:
    """Mutate the representative realization of every trajectory.

    Each representative moves by the repulsive drift computed among the
    representatives' coordinates plus ``gamma``-scaled Gaussian noise;
    every other realization is returned unchanged.  Results are clamped
    to the box.
    """
    return _mutate(state.positions, reps, state, config, stream)


def directional_update(
    proposals: np.ndarray,
    state: EngineState,
    config: SabresConfig,
    stream: RandomStream,
) -> np.ndarray:
    """Rebuild every slot from scrambled slots, gain-weighted.

    For slot (i, k) two independent swaps are drawn, each pairing a
    trajectory index sigma_n != i with a realization index sigma_m != k.
    The first swap supplies the base particle, the second the innovation
    endpoint, and the rebuilt point is

        base - gain * (other - proposal)

    so the slot's own proposal anchors the innovation while the base
    carries the move into another particle's neighborhood.  Each
    coordinate then adopts the rebuilt value with probability
    ``swap_rate`` (at least one coordinate per slot always does); the
    rest keep the slot's own proposal.  Results are clamped to the box.
    The moves scale with the population spread, so acceptance keeps a
    useful step size from the first iterations down to the final digits.
    """
    n, m, d = proposals.shape
    gain = current_gain(state, config)
    nm = n * m
    flat = proposals.reshape(nm, d)
    rows_n = np.repeat(np.arange(n), m)
    rows_m = np.tile(np.arange(m), n)
    base = proposals[
        stream.indices_excluding(n, rows_n), stream.indices_excluding(m, rows_m), :
    ]
    other = proposals[
        stream.indices_excluding(n, rows_n), stream.indices_excluding(m, rows_m), :
    ]
    rebuilt = base - gain * (other - flat)
    adopt = stream.uniforms(0.0, 1.0, (nm, d)) < config.swap_rate
    adopt[np.arange(nm), stream.integers(0, d, size=nm)] = True
    candidates = np.where(adopt, rebuilt, flat)
    return np.clip(candidates, state.lower_bound, state.upper_bound).reshape(n, m, d)


def rejection_sample(state: EngineState, candidates: np.ndarray, spec: ObjectiveSpec) -> EngineState:
    """Greedy accept/reject: a candidate replaces its particle only when
    its objective value is less than or equal to the stored one."""
    n, m, d = candidates.shape
    values = eval_objective_batch(spec, candidates.reshape(-1, d)).reshape(n, m)
    state.fes_used += n * m
    accept = values <= state.fitness
    state.positions = np.where(accept[:, :, None], candidates, state.positions)
    state.fitness = np.where(accept, values, state.fitness)
    # per-particle fitness never worsens, so the current population minimum
    # is also the running minimum
    flat = int(np.argmin(state.fitness))
    i, k = divmod(flat, m)
    state.best_error = error_value(float(state.fitness[i, k]), spec.f_star)
    state.best_position = state.positions[i, k].copy()
    return state


def step(
    state: EngineState, spec: ObjectiveSpec, config: SabresConfig, stream: RandomStream
) -> EngineState:
    """One full iteration: exploration, gain restart, directional update,
    rejection sampling, variance-history update."""
    mutate = check_exploration_trigger(state, config, stream)
    if config.predict_diffusion:
        noise = stream.standard_normals(state.positions.shape) * state.gamma
        base = np.clip(state.positions + noise, state.lower_bound, state.upper_bound)
    else:
        base = state.positions
    if mutate:
        reps = select_representatives(config, stream)
        proposals = _mutate(base, reps, state, config, stream)
    else:
        proposals = base
    check_gain_restart(state, config, stream)
    candidates = directional_update(proposals, state, config, stream)
    rejection_sample(state, candidates, spec)
    state.var_history = [state.var_history[1], float(np.var(state.fitness))]
    state.tau += 1
    return state


def trace_point(state: EngineState) -> Tuple[int, float, float]:
    """(evaluations used, population minimum error, population error std)."""
    errs = error_values(state.fitness.ravel(), state.f_star)
    return (state.fes_used, float(errs.min()), float(errs.std()))


def trace_checkpoints(population: int, max_fes: int) -> List[int]:
    """Geometric checkpoint schedule: ``population * ceil(10^(j/8))``."""
    points: List[int] = []
    j = 0
    while True:
        c = population * math.ceil(10.0 ** (j / 8.0))
        if c > max_fes:
            break
        if not points or c > points[-1]:
            points.append(c)
        j += 1
    return points


def run(config: SabresConfig, spec: ObjectiveSpec, stream: RandomStream) -> RunResult:
    """Optimize until the error target is met or the budget cannot fund
    another full population evaluation; returns the best point found and
    a convergence trace sampled at geometric checkpoints."""
    config.validate(spec.dim)
    state = init_population(config, spec, stream)
    population = config.n * config.m
    checkpoints = trace_checkpoints(population, config.max_fes)
    trace: List[Tuple[int, float, float]] = []
    next_cp = 0

    def maybe_record() -> None:
        nonlocal next_cp
        crossed = False
        while next_cp < len(checkpoints) and state.fes_used >= checkpoints[next_cp]:
            next_cp += 1
            crossed = True
        if crossed:
            trace.append(trace_point(state))

    maybe_record()
    while state.best_error > config.target_error and state.fes_used + population <= config.max_fes:
        step(state, spec, config, stream)
        maybe_record()
    if not trace or trace[-1][0] != state.fes_used:
        trace.append(trace_point(state))
    reason = "target_reached" if state.best_error <= config.target_error else "budget_exhausted"
    return RunResult(
        best_error=state.best_error,
        best_position=state.best_position.copy(),
        fes_used=state.fes_used,
        iterations=state.tau - 1,
        terminated=reason,
        restart_count=state.restart_count,
        trace=tuple(trace),
    )
