"""Seeded, reproducible randomness for the optimizer and its harness.

A :class:`RandomStream` wraps a PCG64 generator seeded through
``numpy.random.SeedSequence`` so that a fixed seed reproduces every draw
bit-for-bit.  Sub-streams are derived by hashing ``(seed, key, ...)``
into a spawn key, which keeps per-trial and per-component sequences
independent of evaluation order.
"""

from __future__ import annotations

import hashlib

import numpy as np

__all__ = ["RandomStream", "new_stream", "split_seed"]

_U64 = 0xFFFFFFFFFFFFFFFF


def split_seed(base_seed: int, index: int) -> int:
    """Derive a 64-bit trial seed from ``(base_seed, index)``.

    Uses one splitmix64 round on ``base_seed + (index + 1) * GOLDEN``,
    the documented seed mapping for trial batches: distinct indices give
    well-separated seeds and the mapping is identical on every platform.
    """
    z = (base_seed + (index + 1) * 0x9E3779B97F4A7C15) & _U64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _U64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _U64
    return (z ^ (z >> 31)) & _U64


def _key_words(key) -> tuple[int, ...]:
    # Map a label (int or str) onto uint32 words for a SeedSequence spawn key.
    if isinstance(key, bool):
        raise TypeError("sub-stream keys must be int or str, not bool")
    if isinstance(key, (int, np.integer)):
        k = int(key) & _U64
        return (k & 0xFFFFFFFF, (k >> 32) & 0xFFFFFFFF)
    if isinstance(key, str):
        digest = hashlib.sha256(key.encode("utf-8")).digest()
        return tuple(int.from_bytes(digest[i : i + 4], "little") for i in range(0, 16, 4))
    raise TypeError(f"sub-stream keys must be int or str, got {type(key).__name__}")


class RandomStream:
    """Single-owner source of uniforms, Gaussians and constrained index draws.

    Two streams built with the same ``(seed, keys)`` emit identical
    sequences.  A stream is not thread-safe; derive one sub-stream per
    worker instead of sharing.
    """

    def __init__(self, seed: int, _spawn_key: tuple[int, ...] = ()):
        if not 0 <= int(seed) <= _U64:
            raise ValueError(f"seed must fit in 64 bits, got {seed}")
        self.seed = int(seed)
        self._spawn_key = tuple(_spawn_key)
        self._gen = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(self.seed, spawn_key=self._spawn_key))
        )

    def __repr__(self):
        return f"RandomStream(seed={self.seed}, spawn_key={self._spawn_key})"

    def substream(self, *keys) -> "RandomStream":
        """Derive an independent stream for ``(seed, *keys)``.

        Keys may be ints or strings; the derivation does not advance
        this stream, so sub-streams are position-independent.
        """
        words: list[int] = []
        for key in keys:
            words.extend(_key_words(key))
        return RandomStream(self.seed, self._spawn_key + tuple(words))

    # -- serialization ------------------------------------------------

    @property
    def state(self) -> dict:
        """JSON-serializable snapshot of the stream position."""
        return {
            "seed": self.seed,
            "spawn_key": list(self._spawn_key),
            "pcg64": self._gen.bit_generator.state,
        }

    @state.setter
    def state(self, snapshot: dict) -> None:
        self.seed = int(snapshot["seed"])
        self._spawn_key = tuple(snapshot["spawn_key"])
        self._gen.bit_generator.state = snapshot["pcg64"]

    # -- draws ---------------------------------------------------------

    def uniform(self, lo: float, hi: float) -> float:
        """One uniform draw in ``[lo, hi)``."""
        if lo > hi:
            raise ValueError(f"uniform bounds reversed: lo={lo} > hi={hi}")
        return float(self._gen.uniform(lo, hi))

    def uniforms(self, lo: float, hi: float, size) -> np.ndarray:
        """Array of uniform draws in ``[lo, hi)``."""
        if np.any(np.asarray(lo) > np.asarray(hi)):
            raise ValueError(f"uniform bounds reversed: lo={lo} > hi={hi}")
        return self._gen.uniform(lo, hi, size=size)

    def standard_normal(self) -> float:
        """One N(0, 1) draw."""
        return float(self._gen.standard_normal())

    def standard_normals(self, size) -> np.ndarray:
        """Array of N(0, 1) draws."""
        return self._gen.standard_normal(size=size)

    def index_excluding(self, n: int, excluded: int) -> int:
        """Uniform draw over ``{0, ..., n-1} \\ {excluded}``."""
        if n < 2:
            raise ValueError(f"index_excluding needs n >= 2, got n={n}")
        if not 0 <= excluded < n:
            raise ValueError(f"excluded index {excluded} outside [0, {n})")
        r = int(self._gen.integers(0, n - 1))
        return r + (r >= excluded)

    def indices_excluding(self, n: int, excluded: np.ndarray) -> np.ndarray:
        """Per-element uniform draws over ``{0, ..., n-1}`` minus each excluded entry.

        Same law as :meth:`index_excluding` applied element-wise, drawn in
        one call so the hot loop stays cheap.
        """
        if n < 2:
            raise ValueError(f"indices_excluding needs n >= 2, got n={n}")
        excluded = np.asarray(excluded)
        r = self._gen.integers(0, n - 1, size=excluded.shape)
        return r + (r >= excluded)

    def integers(self, lo: int, hi: int, size=None):
        """Integer draws in ``[lo, hi)``."""
        if size is None:
            return int(self._gen.integers(lo, hi))
        return self._gen.integers(lo, hi, size=size)


def new_stream(seed: int) -> RandomStream:
    """Create a root stream; equal seeds give equal streams."""
    return RandomStream(seed)
