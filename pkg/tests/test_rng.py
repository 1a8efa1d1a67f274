"""Determinism and distribution checks for the seeded stream layer."""

import numpy as np
import pytest

from sabres.rng import RandomStream, new_stream, split_seed


def drain(stream, count=64):
    """Fixed mixed-call sequence, returned as a flat float array."""
    out = []
    for k in range(count):
        out.append(stream.uniform(-1.0, 1.0))
        out.append(stream.standard_normal())
        out.append(float(stream.integers(0, 97)))
        out.append(float(stream.index_excluding(12, k % 12)))
    out.extend(stream.uniforms(0.0, 1.0, 16).tolist())
    out.extend(stream.standard_normals(16).tolist())
    return np.array(out)


def test_same_seed_same_sequence():
    a = drain(RandomStream(20260814))
    b = drain(RandomStream(20260814))
    assert np.array_equal(a, b)


def test_different_seeds_differ():
    a = drain(RandomStream(1))
    b = drain(RandomStream(2))
    assert not np.array_equal(a, b)


def test_new_stream_matches_constructor():
    assert np.array_equal(drain(new_stream(5)), drain(RandomStream(5)))


def test_split_seed_is_deterministic_and_distinct():
    seeds = [split_seed(42, i) for i in range(2000)]
    assert seeds == [split_seed(42, i) for i in range(2000)]
    assert len(set(seeds)) == 2000
    for s in seeds:
        assert 0 <= s <= 0xFFFFFFFFFFFFFFFF
    # different base seeds must not share trial seeds
    assert not set(seeds) & {split_seed(43, i) for i in range(2000)}


def test_uniform_bounds():
    stream = RandomStream(9)
    draws = stream.uniforms(-3.5, 2.25, 20000)
    assert draws.min() >= -3.5 and draws.max() < 2.25
    for _ in range(200):
        assert -3.5 <= stream.uniform(-3.5, 2.25) < 2.25
    with pytest.raises(ValueError):
        stream.uniform(1.0, 0.0)


def test_integers_bounds():
    stream = RandomStream(11)
    draws = stream.integers(3, 9, size=5000)
    assert draws.min() >= 3 and draws.max() <= 8
    assert set(np.unique(draws)) == {3, 4, 5, 6, 7, 8}
    assert isinstance(stream.integers(0, 4), int)


def test_index_excluding_never_hits_excluded():
    stream = RandomStream(13)
    for n in (2, 3, 7):
        for excluded in range(n):
            draws = [stream.index_excluding(n, excluded) for _ in range(300)]
            assert excluded not in draws
            assert set(draws) <= set(range(n)) - {excluded}
            if n > 2:
                # every admissible index shows up over 300 draws
                assert set(draws) == set(range(n)) - {excluded}
    with pytest.raises(ValueError):
        stream.index_excluding(1, 0)
    with pytest.raises(ValueError):
        stream.index_excluding(5, 5)


def test_index_excluding_is_uniform():
    stream = RandomStream(17)
    n, excluded, draws = 5, 2, 40000
    counts = np.zeros(n)
    for _ in range(draws):
        counts[stream.index_excluding(n, excluded)] += 1
    assert counts[excluded] == 0
    expected = draws / (n - 1)
    assert np.all(np.abs(counts[counts > 0] - expected) < 5 * np.sqrt(expected))


def test_indices_excluding_matches_scalar_law():
    stream = RandomStream(19)
    excluded = np.array([0, 3, 3, 1, 2, 4, 0, 2])
    for _ in range(500):
        draws = stream.indices_excluding(5, excluded)
        assert draws.shape == excluded.shape
        assert np.all(draws != excluded)
        assert np.all((draws >= 0) & (draws < 5))


def test_normal_moments():
    draws = RandomStream(23).standard_normals(200000)
    assert abs(draws.mean()) < 0.01
    assert abs(draws.std() - 1.0) < 0.01


def test_substream_is_position_independent():
    parent_a = RandomStream(31)
    parent_b = RandomStream(31)
    parent_b.uniforms(0.0, 1.0, 1000)  # consume the parent; children must not care
    child_a = parent_a.substream("trial", 7)
    child_b = parent_b.substream("trial", 7)
    assert np.array_equal(drain(child_a), drain(child_b))


def test_substream_keys_separate():
    root = RandomStream(37)
    a = drain(root.substream("mutation"))
    b = drain(root.substream("update"))
    c = drain(root.substream("mutation", 1))
    assert not np.array_equal(a, b)
    assert not np.array_equal(a, c)
    with pytest.raises(TypeError):
        root.substream(1.5)
    with pytest.raises(TypeError):
        root.substream(True)


def test_state_snapshot_roundtrip():
    stream = RandomStream(41)
    stream.uniforms(0.0, 1.0, 123)
    snap = stream.state
    tail = drain(stream)
    fresh = RandomStream(41)
    fresh.state = snap
    assert np.array_equal(drain(fresh), tail)


def test_seed_range_validation():
    with pytest.raises(ValueError):
        RandomStream(-1)
    with pytest.raises(ValueError):
        RandomStream(1 << 64)
