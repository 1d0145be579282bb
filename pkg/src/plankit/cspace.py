"""Configuration-space primitives.

Configurations are read-only ``float64`` numpy vectors. All functions here
are pure; none of them mutate their inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ContractViolation

Configuration = np.ndarray


def as_config(coords) -> Configuration:
    """Return ``coords`` as an immutable, finite float64 configuration."""
    q = np.array(coords, dtype=np.float64).reshape(-1)
    if q.size < 1:
        raise ContractViolation("configuration must have at least one coordinate")
    if not np.all(np.isfinite(q)):
        raise ContractViolation(f"configuration has non-finite coordinates: {q.tolist()}")
    q.flags.writeable = False
    return q


def _check_dims(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise ContractViolation(
            f"dimension mismatch: {a.shape[0] if a.ndim else 0} vs {b.shape[0] if b.ndim else 0}"
        )


def distance(a: Configuration, b: Configuration) -> float:
    """Euclidean distance between two configurations."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    _check_dims(a, b)
    # Must round exactly like the vectorised nearest-neighbour scan so ties
    # agree. numpy sums fewer than 8 terms left to right, as does this loop.
    if a.shape[0] < 8:
        total = 0.0
        for x, y in zip(a.tolist(), b.tolist()):
            total += (x - y) * (x - y)
        return math.sqrt(total)
    diff = a - b
    return float(np.sqrt(np.sum(diff * diff)))


def interpolate(a: Configuration, b: Configuration, t: float) -> Configuration:
    """Point ``a + t * (b - a)`` on the straight segment from ``a`` to ``b``."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    _check_dims(a, b)
    if not 0.0 <= t <= 1.0:
        raise ContractViolation(f"interpolation parameter must lie in [0, 1], got {t}")
    if t == 0.0:
        return as_config(a)
    if t == 1.0:
        return as_config(b)
    return as_config(a + t * (b - a))


def steer(origin: Configuration, target: Configuration, eps: float) -> Configuration:
    """Move from ``origin`` toward ``target`` by at most ``eps``.

    ``target`` is returned unchanged when it is already within reach.
    """
    if not eps > 0:
        raise ContractViolation(f"steering step must be positive, got {eps}")
    origin = np.asarray(origin, dtype=np.float64)
    target = np.asarray(target, dtype=np.float64)
    d = distance(origin, target)
    if d <= eps:
        return as_config(target)
    return as_config(origin + (target - origin) * (eps / d))


@dataclass(frozen=True)
class Bounds:
    """Per-axis closed intervals ``[lo[i], hi[i]]``."""

    lo: np.ndarray
    hi: np.ndarray

    def __init__(self, lo: Sequence[float], hi: Sequence[float]):
        lo_arr = as_config(lo)
        hi_arr = as_config(hi)
        _check_dims(lo_arr, hi_arr)
        if not np.all(lo_arr < hi_arr):
            raise ContractViolation("every bound must satisfy lo < hi")
        object.__setattr__(self, "lo", lo_arr)
        object.__setattr__(self, "hi", hi_arr)

    @property
    def dim(self) -> int:
        return int(self.lo.shape[0])

    def contains(self, q: Configuration) -> bool:
        q = np.asarray(q)
        return q.shape == self.lo.shape and bool(np.all(q >= self.lo) and np.all(q <= self.hi))

    def volume(self) -> float:
        return float(math.prod(self.hi - self.lo))
