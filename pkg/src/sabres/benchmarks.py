"""Benchmark objectives: analytic bases, shift/rotation transforms, hybrids,
compositions, and a registry of ready-made problem instances.

The suite mirrors the structure of the CEC-2022 single-objective
bound-constrained set: six analytic base functions wrapped in
shift/rotation transforms, hybrid functions that split the rotated
coordinates into contiguous groups, and compositions blended by
normalized Gaussian proximity weights.  Official competition data files
are not bundled; transforms are generated procedurally from a seed, or
loaded from a plain-text file (see :func:`load_transform`).

Conventions shared by every problem instance:

* the reported optimum value is ``f_star`` and the global optimizer sits
  at the transform shift (the origin when untransformed);
* base functions whose textbook minimizer is not the origin (rosenbrock,
  levy) are evaluated at ``z + 1`` so the shifted optimum aligns;
* errors are floored at ``ERROR_FLOOR`` = 1e-8, the solved threshold.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np

from .rng import RandomStream

__all__ = [
    "ERROR_FLOOR",
    "BASE_FUNCTIONS",
    "TransformData",
    "CompositionComponent",
    "ObjectiveSpec",
    "OptimumViolationError",
    "eval_base",
    "apply_transform",
    "generate_transform",
    "load_transform",
    "write_transform",
    "eval_objective",
    "eval_objective_batch",
    "error_value",
    "make_objective",
    "registry_ids",
    "describe_functions",
]

ERROR_FLOOR = 1e-8


class OptimumViolationError(RuntimeError):
    """Objective value fell below the declared optimum: the instance is broken."""


# ---------------------------------------------------------------------------
# Base functions, vectorized over the trailing axis.
#
# Reductions run over the last (contiguous) axis only, which keeps single-row
# and batched evaluation bit-identical; the engine relies on that to keep its
# fitness cache exactly reproducible.
# ---------------------------------------------------------------------------


def _sphere(y: np.ndarray) -> np.ndarray:
    return (y * y).sum(axis=-1)


def _zakharov(y: np.ndarray) -> np.ndarray:
    s1 = (y * y).sum(axis=-1)
    s2 = (0.5 * np.arange(1.0, y.shape[-1] + 1.0) * y).sum(axis=-1)
    return s1 + s2**2 + s2**4


def _rosenbrock(y: np.ndarray) -> np.ndarray:
    if y.shape[-1] < 2:
        return np.zeros(y.shape[:-1])
    a, b = y[..., :-1], y[..., 1:]
    return (100.0 * (a * a - b) ** 2 + (a - 1.0) ** 2).sum(axis=-1)


def _rastrigin(y: np.ndarray) -> np.ndarray:
    return 10.0 * y.shape[-1] + (y * y - 10.0 * np.cos(2.0 * np.pi * y)).sum(axis=-1)


def _levy(y: np.ndarray) -> np.ndarray:
    w = 1.0 + (y - 1.0) / 4.0
    head = np.sin(np.pi * w[..., 0]) ** 2
    tail = (w[..., -1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * w[..., -1]) ** 2)
    if y.shape[-1] < 2:
        return head + tail
    mid = w[..., :-1]
    body = ((mid - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * mid + 1.0) ** 2)).sum(axis=-1)
    return head + body + tail


def _schaffer_f7(y: np.ndarray) -> np.ndarray:
    # Expanded Schaffer F7; degenerates to 0 for a single coordinate.
    d = y.shape[-1]
    if d < 2:
        return np.zeros(y.shape[:-1])
    s = np.sqrt(y[..., :-1] ** 2 + y[..., 1:] ** 2)
    t = np.sin(50.0 * s**0.2)
    acc = (np.sqrt(s) * (1.0 + t * t)).sum(axis=-1)
    return (acc / (d - 1)) ** 2


@dataclass(frozen=True)
class _BaseFunction:
    fn: Callable[[np.ndarray], np.ndarray]
    minimizer_offset: float  # evaluation point is z + offset so the optimum sits at z = 0
    domain_scale: float  # conventional search-box-to-native-domain scale


BASE_FUNCTIONS: dict[str, _BaseFunction] = {
    "sphere": _BaseFunction(_sphere, 0.0, 1.0),
    "zakharov": _BaseFunction(_zakharov, 0.0, 1.0),
    "rosenbrock": _BaseFunction(_rosenbrock, 1.0, 2.048 / 100.0),
    "schaffer_f7": _BaseFunction(_schaffer_f7, 0.0, 1.0),
    "rastrigin": _BaseFunction(_rastrigin, 0.0, 5.12 / 100.0),
    "levy": _BaseFunction(_levy, 1.0, 1.0),
}


def eval_base(name: str, x) -> float:
    """Evaluate a base function by its standard analytic formula.

    ``rosenbrock`` and ``levy`` keep their textbook minimizers at the
    ones-vector here; alignment to the shifted optimum happens inside
    :func:`eval_objective`, not in this primitive.
    """
    try:
        base = BASE_FUNCTIONS[name]
    except KeyError:
        raise ValueError(f"unknown base function {name!r}; known: {sorted(BASE_FUNCTIONS)}") from None
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size < 1:
        raise ValueError(f"x must be a non-empty 1-d vector, got shape {x.shape}")
    if not np.isfinite(x).all():
        raise ValueError("x contains NaN or infinity")
    return float(base.fn(x))


# ---------------------------------------------------------------------------
# Transforms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TransformData:
    """Shift/rotation/scale triple defining ``z = scale * R @ (x - shift)``."""

    shift: np.ndarray
    rotation: np.ndarray
    scale: float = 1.0

    def __post_init__(self):
        shift = np.ascontiguousarray(np.asarray(self.shift, dtype=float))
        rotation = np.ascontiguousarray(np.asarray(self.rotation, dtype=float))
        d = shift.shape[0]
        if shift.ndim != 1 or rotation.shape != (d, d):
            raise ValueError(
                f"transform shapes inconsistent: shift {shift.shape}, rotation {rotation.shape}"
            )
        if self.scale <= 0:
            raise ValueError(f"transform scale must be positive, got {self.scale}")
        dev = orthogonality_deviation(rotation)
        if dev > 1e-8:
            raise ValueError(f"rotation is not orthogonal (max |R R^T - I| = {dev:.3e})")
        shift.setflags(write=False)
        rotation.setflags(write=False)
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "rotation", rotation)

    @property
    def dim(self) -> int:
        return self.shift.shape[0]


def orthogonality_deviation(rotation: np.ndarray) -> float:
    """Max-abs entry of ``R @ R.T - I``."""
    d = rotation.shape[0]
    return float(np.abs(rotation @ rotation.T - np.eye(d)).max())


def apply_transform(x, t: TransformData):
    """Map search-space points to the base function domain: ``scale * R @ (x - shift)``.

    Accepts a single vector or a batch with points along the first axis;
    the rotation is applied row-wise via a broadcast multiply-sum so both
    call shapes produce bit-identical coordinates.
    """
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != t.dim:
        raise ValueError(f"dimension mismatch: x has {x.shape[-1]} coordinates, transform {t.dim}")
    diff = x - t.shift
    return ((diff[..., None, :] * t.rotation).sum(axis=-1)) * t.scale


def _orthonormalize(mat: np.ndarray) -> np.ndarray:
    # Modified Gram-Schmidt on rows; input is a square Gaussian matrix so
    # rank deficiency has probability zero, but guard anyway.
    q = np.array(mat, dtype=float)
    d = q.shape[0]
    for i in range(d):
        for j in range(i):
            q[i] -= (q[i] @ q[j]) * q[j]
        norm = np.linalg.norm(q[i])
        if norm < 1e-12:
            raise ValueError("degenerate basis while orthonormalizing rotation")
        q[i] /= norm
    return q


def generate_transform(
    stream: RandomStream, dim: int, lower: float = -100.0, upper: float = 100.0, scale: float = 1.0
) -> TransformData:
    """Draw a random transform: shift in the middle 80% of the box, rotation
    from an orthonormalized Gaussian matrix.  Deterministic given the stream."""
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    half = 0.4 * (upper - lower)
    mid = 0.5 * (upper + lower)
    shift = stream.uniforms(mid - half, mid + half, size=dim)
    rotation = _orthonormalize(stream.standard_normals((dim, dim)))
    return TransformData(shift=shift, rotation=rotation, scale=scale)


def load_transform(path, dim: int) -> TransformData:
    """Parse a transform file.

    Layout: line 1 the dimension, line 2 the shift vector, the next
    ``dim`` lines the rotation rows, final line the scale.  Raises
    distinct errors for a missing file, a malformed line, a dimension
    mismatch, and a non-orthogonal matrix (tolerance 1e-8).
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"transform file not found: {path}")
    lines = [ln.strip() for ln in path.read_text().splitlines() if ln.strip()]

    def parse_row(idx: int, expect: int) -> np.ndarray:
        if idx >= len(lines):
            raise ValueError(f"{path}: line {idx + 1}: file truncated")
        try:
            row = np.array([float(tok) for tok in lines[idx].split()])
        except ValueError:
            raise ValueError(f"{path}: line {idx + 1}: cannot parse numbers") from None
        if row.size != expect:
            raise ValueError(f"{path}: line {idx + 1}: expected {expect} values, got {row.size}")
        return row

    file_dim = int(parse_row(0, 1)[0])
    if file_dim != dim:
        raise ValueError(f"{path}: dimension mismatch: file says {file_dim}, expected {dim}")
    shift = parse_row(1, dim)
    rotation = np.stack([parse_row(2 + i, dim) for i in range(dim)])
    scale = float(parse_row(2 + dim, 1)[0])
    dev = orthogonality_deviation(rotation)
    if dev > 1e-8:
        raise ValueError(f"{path}: rotation is not orthogonal (max |R R^T - I| = {dev:.3e})")
    return TransformData(shift=shift, rotation=rotation, scale=scale)


def write_transform(path, t: TransformData) -> None:
    """Inverse of :func:`load_transform`; floats use round-trip precision."""
    rows = [str(t.dim), " ".join(repr(float(v)) for v in t.shift)]
    rows += [" ".join(repr(float(v)) for v in row) for row in t.rotation]
    rows.append(repr(float(t.scale)))
    Path(path).write_text("\n".join(rows) + "\n")


# ---------------------------------------------------------------------------
# Problem instances
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CompositionComponent:
    """One blended component: base function, own transform, and weighting."""

    name: str
    transform: TransformData
    lam: float = 1.0
    bias: float = 0.0
    sigma: float = 10.0

    def __post_init__(self):
        if self.name not in BASE_FUNCTIONS:
            raise ValueError(f"unknown base function {self.name!r}")
        if self.lam <= 0 or self.sigma <= 0:
            raise ValueError("component lam and sigma must be positive")
        if self.bias < 0:
            raise ValueError("component bias must be non-negative")


@dataclass(frozen=True)
class ObjectiveSpec:
    """A benchmark problem: bounds, optimum value, and evaluation recipe.

    ``kind`` selects the recipe: a single transformed base function, a
    hybrid that splits the transformed coordinates into contiguous
    groups, or a composition blending independently shifted components.
    """

    id: str
    dim: int
    kind: str  # "base" | "hybrid" | "composition"
    lower_bound: float = -100.0
    upper_bound: float = 100.0
    f_star: float = 0.0
    transform: Optional[TransformData] = None
    base_name: Optional[str] = None
    groups: tuple = ()  # hybrid: ((name, fraction), ...)
    components: tuple = ()  # composition: (CompositionComponent, ...)

    def __post_init__(self):
        if self.lower_bound >= self.upper_bound:
            raise ValueError(f"{self.id}: lower bound must be below upper bound")
        if self.dim < 1:
            raise ValueError(f"{self.id}: dim must be >= 1")
        if self.kind not in ("base", "hybrid", "composition"):
            raise ValueError(f"{self.id}: unknown kind {self.kind!r}")
        for t in self._all_transforms():
            if t.dim != self.dim:
                raise ValueError(f"{self.id}: transform dimension {t.dim} != {self.dim}")
            inside = (t.shift > self.lower_bound) & (t.shift < self.upper_bound)
            if not inside.all():
                raise ValueError(f"{self.id}: transform shift not strictly inside the box")
        if self.kind == "base":
            if self.base_name not in BASE_FUNCTIONS:
                raise ValueError(f"{self.id}: unknown base function {self.base_name!r}")
        elif self.kind == "hybrid":
            object.__setattr__(self, "groups", tuple((str(n), float(f)) for n, f in self.groups))
            self._group_slices()  # validates names, fractions, and sizes
        else:
            if not self.components:
                raise ValueError(f"{self.id}: composition needs at least one component")

    def _all_transforms(self):
        if self.transform is not None:
            yield self.transform
        for comp in self.components:
            yield comp.transform

    def _group_slices(self) -> list[tuple[str, slice]]:
        names = [n for n, _ in self.groups]
        fracs = [f for _, f in self.groups]
        for name in names:
            if name not in BASE_FUNCTIONS:
                raise ValueError(f"{self.id}: unknown base function {name!r}")
        if abs(sum(fracs) - 1.0) > 1e-9:
            raise ValueError(f"{self.id}: group fractions must sum to 1, got {sum(fracs)}")
        sizes = [int(np.ceil(f * self.dim)) for f in fracs[:-1]]
        sizes.append(self.dim - sum(sizes))
        if min(sizes) < 1:
            raise ValueError(f"{self.id}: dim {self.dim} too small for {len(fracs)} groups")
        out, start = [], 0
        for name, size in zip(names, sizes):
            out.append((name, slice(start, start + size)))
            start += size
        return out

    def optimizer(self) -> np.ndarray:
        """The known global optimizer in search space."""
        if self.kind == "composition":
            return self.components[0].transform.shift.copy()
        if self.transform is not None:
            return self.transform.shift.copy()
        return np.zeros(self.dim)


def _aligned_base_values(name: str, z: np.ndarray, extra_scale: float = 1.0) -> np.ndarray:
    base = BASE_FUNCTIONS[name]
    return base.fn(z * extra_scale + base.minimizer_offset)


def _composition_values(spec: ObjectiveSpec, x: np.ndarray) -> np.ndarray:
    # Normalized proximity weights: w_c = exp(-d^2 / (2 D sigma^2)) / d, with an
    # exact hit on a component shift collapsing the weight vector to one-hot.
    vals = []
    weights = []
    exact = []
    for comp in spec.components:
        z = apply_transform(x, comp.transform)
        vals.append(comp.lam * _aligned_base_values(comp.name, z) + comp.bias)
        diff = x - comp.transform.shift
        d2 = (diff * diff).sum(axis=-1)
        with np.errstate(divide="ignore"):
            w = np.where(d2 > 0.0, np.exp(-d2 / (2.0 * spec.dim * comp.sigma**2)) / np.sqrt(d2), np.inf)
        weights.append(w)
        exact.append(d2 == 0.0)
    vals = np.stack(vals, axis=-1)
    weights = np.stack(weights, axis=-1)
    exact = np.stack(exact, axis=-1)
    hit = exact.any(axis=-1)
    if np.any(hit):
        weights = np.where(hit[..., None], exact.astype(float), weights)
    weights = weights / weights.sum(axis=-1, keepdims=True)
    return (weights * vals).sum(axis=-1)


def eval_objective_batch(spec: ObjectiveSpec, points) -> np.ndarray:
    """Evaluate a batch of points, one per row; pure and bit-reproducible.

    Single rows evaluated alone return exactly the batched values, so
    cached fitness remains verifiable point by point.
    """
    x = np.ascontiguousarray(np.asarray(points, dtype=float))
    if x.ndim == 1:
        x = x[None, :]
    if x.ndim != 2 or x.shape[1] != spec.dim:
        raise ValueError(f"{spec.id}: expected points of dimension {spec.dim}, got shape {x.shape}")
    if not np.isfinite(x).all():
        raise ValueError(f"{spec.id}: points contain NaN or infinity")
    if spec.kind == "composition":
        return _composition_values(spec, x) + spec.f_star
    z = apply_transform(x, spec.transform) if spec.transform is not None else x
    if spec.kind == "base":
        return _aligned_base_values(spec.base_name, z) + spec.f_star
    total = np.zeros(x.shape[0])
    for name, sl in spec._group_slices():
        total = total + _aligned_base_values(name, z[:, sl], BASE_FUNCTIONS[name].domain_scale)
    return total + spec.f_star


def eval_objective(spec: ObjectiveSpec, x) -> float:
    """Evaluate one point."""
    return float(eval_objective_batch(spec, np.asarray(x, dtype=float)[None, :])[0])


def error_value(f_val: float, f_star: float) -> float:
    """Error relative to the optimum, floored at 1e-8 (the solved threshold)."""
    if f_val < f_star - 1e-9:
        raise OptimumViolationError(
            f"objective value {f_val!r} fell below the declared optimum {f_star!r}"
        )
    return max(f_val - f_star, ERROR_FLOOR)


def error_values(f_vals: np.ndarray, f_star: float) -> np.ndarray:
    """Vectorized :func:`error_value`."""
    f_vals = np.asarray(f_vals, dtype=float)
    if np.any(f_vals < f_star - 1e-9):
        bad = float(f_vals.min())
        raise OptimumViolationError(
            f"objective value {bad!r} fell below the declared optimum {f_star!r}"
        )
    return np.maximum(f_vals - f_star, ERROR_FLOOR)


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

_PLAIN_IDS = tuple(sorted(BASE_FUNCTIONS))

# CEC-2022-style roster built from the six bases above.  f1-f5 are single
# shifted/rotated bases, f6-f8 hybrids, f9-f12 compositions.  The lam values
# keep component magnitudes comparable across the +-100 box.
_HYBRIDS = {
    "f6": (("zakharov", 0.4), ("rosenbrock", 0.4), ("rastrigin", 0.2)),
    "f7": (
        ("rastrigin", 0.1),
        ("schaffer_f7", 0.2),
        ("levy", 0.2),
        ("zakharov", 0.2),
        ("sphere", 0.1),
        ("rosenbrock", 0.2),
    ),
    "f8": (
        ("levy", 0.3),
        ("rastrigin", 0.2),
        ("schaffer_f7", 0.2),
        ("sphere", 0.1),
        ("rosenbrock", 0.2),
    ),
}

# (name, lam, bias, sigma) per component; the bias-0 head is the global basin.
_COMPOSITIONS = {
    "f9": (
        ("rosenbrock", 2e-2, 0.0, 10.0),
        ("sphere", 5e-3, 200.0, 20.0),
        ("rastrigin", 1.0, 300.0, 30.0),
        ("levy", 1e-2, 100.0, 40.0),
        ("schaffer_f7", 1.0, 400.0, 50.0),
    ),
    "f10": (
        ("rastrigin", 1.0, 0.0, 20.0),
        ("sphere", 5e-3, 200.0, 10.0),
        ("levy", 1e-2, 100.0, 10.0),
    ),
    "f11": (
        ("schaffer_f7", 1.0, 0.0, 20.0),
        ("rastrigin", 1.0, 200.0, 20.0),
        ("rosenbrock", 2e-2, 300.0, 30.0),
        ("levy", 1e-2, 400.0, 30.0),
        ("sphere", 5e-3, 200.0, 20.0),
    ),
    "f12": (
        ("rastrigin", 1.0, 0.0, 10.0),
        ("schaffer_f7", 1.0, 300.0, 20.0),
        ("levy", 1e-2, 500.0, 30.0),
        ("rosenbrock", 2e-2, 100.0, 40.0),
        ("sphere", 5e-3, 400.0, 50.0),
        ("rastrigin", 1.0, 200.0, 60.0),
    ),
}

_SUITE_BASES = {
    "f1": "zakharov",
    "f2": "rosenbrock",
    "f3": "schaffer_f7",
    "f4": "rastrigin",  # plain rastrigin stands in for the non-continuous variant
    "f5": "levy",
}

# Ablation instance: two widely separated rugged basins.  Both components are
# rastrigin, so a population that collapses into the decoy basin freezes in a
# local well and stays there; only a kick that clears the well spacing can
# migrate it.  Tuned for low-dimensional studies of the exploration trigger.
_TWO_BASIN = (
    ("rastrigin", 1.0, 0.0, 10.0),
    ("rastrigin", 1.0, 30.0, 10.0),
)

_TRANSFORM_STREAM_SEED = 0x5AB2E5


def _instance_stream(fid: str, dim: int, instance: int) -> RandomStream:
    return RandomStream(_TRANSFORM_STREAM_SEED).substream("transform", fid, dim, instance)


def _spread_shifts(stream: RandomStream, count: int, dim: int, lower: float, upper: float):
    # Component shifts drawn in the middle 80% of the box, re-drawn until all
    # pairs are at least 35% of the box width apart so basins stay distinct.
    width = upper - lower
    half, mid = 0.4 * width, 0.5 * (upper + lower)
    min_gap = 0.35 * width
    shifts = [stream.uniforms(mid - half, mid + half, size=dim)]
    while len(shifts) < count:
        cand = stream.uniforms(mid - half, mid + half, size=dim)
        if all(np.linalg.norm(cand - s) >= min_gap for s in shifts):
            shifts.append(cand)
    return shifts


def _make_composition(fid: str, dim: int, recipe, instance: int) -> ObjectiveSpec:
    stream = _instance_stream(fid, dim, instance)
    shifts = _spread_shifts(stream, len(recipe), dim, -100.0, 100.0)
    comps = []
    for (name, lam, bias, sigma), shift in zip(recipe, shifts):
        rotation = _orthonormalize(stream.standard_normals((dim, dim)))
        t = TransformData(shift=shift, rotation=rotation, scale=BASE_FUNCTIONS[name].domain_scale)
        comps.append(CompositionComponent(name=name, transform=t, lam=lam, bias=bias, sigma=sigma))
    return ObjectiveSpec(id=fid, dim=dim, kind="composition", components=tuple(comps))


def make_objective(
    fid: str, dim: int, instance: int = 0, transform_path=None
) -> ObjectiveSpec:
    """Build a registered problem instance.

    ``instance`` selects the procedural transform data (same id and dim
    with equal instance numbers always yield the identical problem).
    ``transform_path`` overrides the generated shift/rotation for base
    functions with data loaded from a file.
    """
    fid = fid.lower()
    if fid in _PLAIN_IDS:
        return ObjectiveSpec(id=fid, dim=dim, kind="base", base_name=fid)
    if fid in _SUITE_BASES:
        name = _SUITE_BASES[fid]
        if transform_path is not None:
            t = load_transform(transform_path, dim)
        else:
            stream = _instance_stream(fid, dim, instance)
            t = generate_transform(stream, dim, scale=BASE_FUNCTIONS[name].domain_scale)
        return ObjectiveSpec(id=fid, dim=dim, kind="base", base_name=name, transform=t)
    if fid in _HYBRIDS:
        if transform_path is not None:
            t = load_transform(transform_path, dim)
        else:
            t = generate_transform(_instance_stream(fid, dim, instance), dim, scale=1.0)
        return ObjectiveSpec(id=fid, dim=dim, kind="hybrid", groups=_HYBRIDS[fid], transform=t)
    if fid in _COMPOSITIONS:
        return _make_composition(fid, dim, _COMPOSITIONS[fid], instance)
    if fid == "two-basin":
        return _make_composition(fid, dim, _TWO_BASIN, instance)
    raise ValueError(f"unknown function id {fid!r}; known ids: {', '.join(registry_ids())}")


def registry_ids() -> list[str]:
    """All accepted function ids."""
    return (
        [f"f{i}" for i in range(1, 13)]
        + ["two-basin"]
        + list(_PLAIN_IDS)
    )


def describe_functions() -> list[tuple[str, str]]:
    """(id, description) pairs for the CLI listing."""
    rows = []
    for i in range(1, 6):
        fid = f"f{i}"
        rows.append((fid, f"shifted rotated {_SUITE_BASES[fid]}"))
    for fid, groups in _HYBRIDS.items():
        rows.append((fid, "hybrid: " + " + ".join(n for n, _ in groups)))
    for fid, comps in _COMPOSITIONS.items():
        rows.append((fid, f"composition of {len(comps)}: " + " + ".join(n for n, *_ in comps)))
    rows.append(("two-basin", "two-component composition with widely separated basins"))
    for name in _PLAIN_IDS:
        rows.append((name, f"plain {name} (no transform)"))
    return rows
