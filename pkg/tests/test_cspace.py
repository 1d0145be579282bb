import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plankit.cspace import Bounds, as_config, distance, interpolate, steer
from plankit.errors import ContractViolation

coord = st.floats(-1e3, 1e3, allow_nan=False)


def vec(dim):
    return st.lists(coord, min_size=dim, max_size=dim).map(as_config)


def test_distance_examples():
    assert distance(as_config([0, 0]), as_config([3, 4])) == 5.0
    q = as_config([1.5, -2.0])
    assert distance(q, q) == 0.0
    assert distance(as_config([1, 2, 3, 4]), as_config([1, 2, 3, 4.5])) == 0.5


def test_distance_dimension_mismatch():
    with pytest.raises(ContractViolation):
        distance(as_config([0, 0]), as_config([0, 0, 0]))


def test_distance_high_dim_matches_numpy():
    a, b = np.arange(10.0), np.arange(10.0)[::-1]
    assert distance(a, b) == pytest.approx(np.linalg.norm(a - b), rel=1e-15)


def test_interpolate_examples():
    assert interpolate(as_config([0, 0]), as_config([10, 20]), 0.5).tolist() == [5, 10]
    a, b = as_config([1, 2]), as_config([7, -3])
    assert interpolate(a, b, 0).tolist() == a.tolist()
    assert interpolate(a, b, 1).tolist() == b.tolist()
    assert interpolate(as_config([2, 2]), as_config([2, 2]), 0.7).tolist() == [2, 2]


@pytest.mark.parametrize("t", [-0.1, 1.0000001, math.nan])
def test_interpolate_rejects_t(t):
    with pytest.raises(ContractViolation):
        interpolate(as_config([0, 0]), as_config([1, 1]), t)


def test_steer_examples():
    assert steer(as_config([0, 0]), as_config([10, 0]), 4).tolist() == [4, 0]
    to = as_config([1, 1])
    assert steer(as_config([0, 0]), to, 10) is not None
    assert steer(as_config([0, 0]), to, 10).tolist() == [1, 1]
    out = steer(as_config([0, 0]), as_config([3, 4]), 2.5)
    assert out.tolist() == pytest.approx([1.5, 2.0], abs=1e-12)


def test_steer_rejects_nonpositive_eps():
    with pytest.raises(ContractViolation):
        steer(as_config([0, 0]), as_config([1, 0]), 0.0)


def test_configuration_invariants():
    with pytest.raises(ContractViolation):
        as_config([0.0, math.inf])
    with pytest.raises(ContractViolation):
        as_config([math.nan, 0.0])
    q = as_config([1, 2])
    with pytest.raises(ValueError):
        q[0] = 5.0


def test_bounds():
    b = Bounds([0, 0], [10, 5])
    assert b.dim == 2 and b.volume() == 50
    assert b.contains([10, 5]) and not b.contains([10.1, 0])
    with pytest.raises(ContractViolation):
        Bounds([0, 1], [1, 1])


@settings(max_examples=300)
@given(st.integers(2, 6).flatmap(lambda d: st.tuples(vec(d), vec(d), vec(d))))
def test_triangle_inequality(abc):
    a, b, c = abc
    assert distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9


@settings(max_examples=300)
@given(
    st.integers(2, 6).flatmap(lambda d: st.tuples(vec(d), vec(d))),
    st.floats(1e-3, 500),
)
def test_steer_contract(ab, eps):
    a, b = ab
    out = steer(a, b, eps)
    d = distance(a, out)
    assert d <= eps + 1e-9
    if distance(a, b) > eps:
        assert abs(d - eps) <= 1e-9 * max(1.0, eps)


@settings(max_examples=300)
@given(st.integers(2, 6).flatmap(lambda d: st.tuples(vec(d), vec(d))), st.floats(0, 1))
def test_interpolation_linearity(ab, t):
    a, b = ab
    assert distance(a, interpolate(a, b, t)) == pytest.approx(t * distance(a, b), abs=1e-9, rel=1e-12)
