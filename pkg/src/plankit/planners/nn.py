"""Linear-scan nearest-neighbour index over a growing point set.

Distances use the same reduction as :func:`plankit.cspace.distance`, so
results (including ties, broken by the smallest id) match a scan that
calls ``distance`` point by point.
"""

from __future__ import annotations

import numpy as np

from ..errors import ContractViolation


class LinearIndex:
    def __init__(self, dim: int, capacity: int = 64):
        self.dim = dim
        self._pts = np.empty((max(capacity, 1), dim), dtype=np.float64)
        self.size = 0
        self.queries = 0

    def add(self, q) -> int:
        if self.size == self._pts.shape[0]:
            grown = np.empty((2 * self._pts.shape[0], self.dim), dtype=np.float64)
            grown[: self.size] = self._pts[: self.size]
            self._pts = grown
        self._pts[self.size] = q
        self.size += 1
        return self.size - 1

    @property
    def points(self) -> np.ndarray:
        return self._pts[: self.size]

    def distances(self, q) -> np.ndarray:
        diff = self._pts[: self.size] - np.asarray(q, dtype=np.float64)
        return np.sqrt(np.sum(diff * diff, axis=1))

    def nearest(self, q) -> int:
        if self.size == 0:
            raise ContractViolation("nearest() on an empty index")
        self.queries += 1
        # argmin returns the first minimum, i.e. the smallest id
        return int(np.argmin(self.distances(q)))

    def near(self, q, radius: float) -> list[int]:
        if radius < 0:
            raise ContractViolation(f"radius must be non-negative, got {radius}")
        self.queries += 1
        return np.flatnonzero(self.distances(q) <= radius).tolist()

    def k_nearest(self, q, k: int, exclude: int | None = None) -> list[int]:
        """Ids of the ``k`` closest points, ordered by (distance, id)."""
        self.queries += 1
        d = self.distances(q)
        ids = np.arange(self.size)
        if exclude is not None:
            keep = ids != exclude
            d, ids = d[keep], ids[keep]
        order = np.lexsort((ids, d))[:k]
        return ids[order].tolist()
