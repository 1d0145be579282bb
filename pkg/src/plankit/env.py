"""Environment backends: occupancy grids and the robots that live in them.

Two collision models are provided behind :class:`EnvModel`:

* :class:`PointMassEnv` - a point robot whose configuration is a pixel
  position ``(x, y)``.
* :class:`PlanarArmEnv` - a fixed-base planar chain of zero-thickness
  links whose configuration is the vector of relative joint angles.

Pixel ``(x, y)`` covers the half-open square ``[x, x+1) x [y, y+1)``; x is
the column, y the row, origin top-left. Everything outside the image is
treated as occupied.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .cspace import Bounds, Configuration, as_config, distance
from .errors import ContractViolation, UnsupportedFormatError
from .netpbm import read_netpbm

OCCUPIED_BELOW = 128


@dataclass(frozen=True, eq=False)
class OccupancyGrid:
    """Boolean obstacle field, ``cells[y, x]`` is True where occupied."""

    cells: np.ndarray

    def __post_init__(self):
        cells = np.array(self.cells, dtype=bool)
        if cells.ndim != 2 or cells.shape[0] < 1 or cells.shape[1] < 1:
            raise ContractViolation(f"grid must be a non-empty 2-D array, got shape {cells.shape}")
        cells.flags.writeable = False
        object.__setattr__(self, "cells", cells)
        # nested lists index faster than numpy for scalar lookups
        object.__setattr__(self, "_rows", cells.tolist())
        sat = np.zeros((cells.shape[0] + 1, cells.shape[1] + 1), dtype=np.int64)
        sat[1:, 1:] = cells.cumsum(axis=0).cumsum(axis=1)
        object.__setattr__(self, "_sat", sat.tolist())

    def box_free(self, x0: int, y0: int, x1: int, y1: int) -> bool:
        """True iff every cell in the inclusive box is inside the grid and free."""
        if x0 < 0 or y0 < 0 or x1 >= self.cells.shape[1] or y1 >= self.cells.shape[0]:
            return False
        sat = self._sat
        return sat[y1 + 1][x1 + 1] - sat[y0][x1 + 1] - sat[y1 + 1][x0] + sat[y0][x0] == 0

    @property
    def width(self) -> int:
        return self.cells.shape[1]

    @property
    def height(self) -> int:
        return self.cells.shape[0]

    @classmethod
    def empty(cls, width: int, height: int) -> "OccupancyGrid":
        return cls(np.zeros((height, width), dtype=bool))

    @classmethod
    def from_luminance(cls, lum: np.ndarray) -> "OccupancyGrid":
        return cls(np.asarray(lum) < OCCUPIED_BELOW)

    def is_occupied(self, x: int, y: int) -> bool:
        if 0 <= x < self.cells.shape[1] and 0 <= y < self.cells.shape[0]:
            return self._rows[y][x]
        return True


_FORMAT_MAGIC = {
    "PGM-P2": b"P2",
    "PGM-P5": b"P5",
    "PPM-P3": b"P3",
    "PPM-P6": b"P6",
}


def load_grid(image_bytes: bytes, format: str | None = None) -> OccupancyGrid:
    """Parse a Netpbm image; pixels darker than 128 become obstacles.

    ``format`` may name the expected encoding (``"PGM-P5"`` or just
    ``"P5"``); a mismatch with the file's magic number is an error.
    """
    if format is not None:
        magic = _FORMAT_MAGIC.get(format.upper(), format.upper().encode())
        if magic not in _FORMAT_MAGIC.values():
            raise UnsupportedFormatError(f"unsupported format {format!r}", 0)
        if bytes(image_bytes[:2]) != magic:
            raise UnsupportedFormatError(
                f"expected magic {magic.decode()} but found {bytes(image_bytes[:2])!r}", 0
            )
    return OccupancyGrid.from_luminance(read_netpbm(image_bytes))


def load_grid_file(path) -> OccupancyGrid:
    return load_grid(Path(path).read_bytes())


def is_occupied(grid: OccupancyGrid, x: int, y: int) -> bool:
    return grid.is_occupied(x, y)


def segment_cells(x0: float, y0: float, x1: float, y1: float) -> list[tuple[int, int]]:
    """Supercover rasterisation of a segment.

    Returns every pixel containing a point of the segment. Where the
    segment passes exactly through a pixel corner, all four pixels sharing
    that corner are included.
    """
    dx = x1 - x0
    dy = y1 - y0
    ts = [0.0, 1.0]
    corners = []
    if dx != 0.0:
        lo, hi = (x0, x1) if x0 < x1 else (x1, x0)
        for k in range(math.floor(lo) + 1, math.ceil(hi)):
            t = (k - x0) / dx
            ts.append(t)
            y = y0 + t * dy
            if y == math.floor(y):
                corners.append((k, int(y)))
    if dy != 0.0:
        lo, hi = (y0, y1) if y0 < y1 else (y1, y0)
        for k in range(math.floor(lo) + 1, math.ceil(hi)):
            ts.append((k - y0) / dy)
    ts.sort()
    floor = math.floor
    cells = {(floor(x0), floor(y0)), (floor(x1), floor(y1))}
    prev = ts[0]
    for t in ts[1:]:
        if t > prev:
            m = 0.5 * (prev + t)
            cells.add((floor(x0 + m * dx), floor(y0 + m * dy)))
        prev = t
    for kx, ky in corners:
        cells.update(((kx - 1, ky - 1), (kx, ky - 1), (kx - 1, ky), (kx, ky)))
    return sorted(cells)


@dataclass
class CheckStats:
    config_checks: int = 0
    motion_checks: int = 0
    invalid_obstacle: int = 0
    invalid_connections: int = 0

    def as_dict(self) -> dict:
        return {
            "config_checks": self.config_checks,
            "motion_checks": self.motion_checks,
            "invalid_obstacle": self.invalid_obstacle,
            "invalid_connections": self.invalid_connections,
        }


class EnvModel(ABC):
    """A collision model over a configuration space.

    Subclasses implement :meth:`_free` (an uncounted validity test) and set
    ``dim``, ``bounds`` and ``resolution``; the counted public checks live
    here so every backend instruments them the same way.
    """

    dim: int
    bounds: Bounds
    resolution: float
    grid: OccupancyGrid

    def __init__(self):
        self.stats = CheckStats()

    @abstractmethod
    def _free(self, q: Sequence[float]) -> bool:
        """Validity of one configuration given as a plain float sequence."""

    def _as_checked(self, q) -> np.ndarray:
        arr = np.asarray(q, dtype=np.float64)
        if arr.shape != (self.dim,):
            raise ContractViolation(f"expected a {self.dim}-D configuration, got shape {arr.shape}")
        return arr

    def is_free_config(self, q: Configuration) -> bool:
        arr = self._as_checked(q)
        self.stats.config_checks += 1
        free = self._free(arr.tolist())
        if not free:
            self.stats.invalid_obstacle += 1
        return free

    def motion_steps(self, a: Configuration, b: Configuration) -> int:
        return max(1, math.ceil(distance(a, b) / self.resolution))

    def is_free_motion(self, a: Configuration, b: Configuration) -> bool:
        a = self._as_checked(a)
        b = self._as_checked(b)
        self.stats.motion_checks += 1
        free = self._motion_free(a, b)
        if not free:
            self.stats.invalid_connections += 1
        return free

    def _motion_free(self, a: np.ndarray, b: np.ndarray) -> bool:
        # canonical direction makes the check exactly symmetric
        if b.tolist() < a.tolist():
            a, b = b, a
        m = self.motion_steps(a, b)
        al = a.tolist()
        if not self._free(al) or not self._free(b.tolist()):
            return False
        diff = (b - a).tolist()
        for k in range(1, m):
            t = k / m
            if not self._free([ai + t * di for ai, di in zip(al, diff)]):
                return False
        return True

    def reset_stats(self) -> None:
        self.stats = CheckStats()


class PointMassEnv(EnvModel):
    """Point robot in pixel coordinates; motions are checked every 1 px."""

    def __init__(self, grid: OccupancyGrid, resolution: float = 1.0):
        super().__init__()
        self.grid = grid
        self.dim = 2
        self.bounds = Bounds([0.0, 0.0], [float(grid.width), float(grid.height)])
        self.resolution = resolution

    def _free(self, q) -> bool:
        return not self.grid.is_occupied(math.floor(q[0]), math.floor(q[1]))


class PlanarArmEnv(EnvModel):
    """Fixed-base planar arm with zero-thickness links.

    Joint angles are relative; the absolute heading of link ``i`` is the
    sum of the first ``i`` joint angles, measured from +x toward +y (image
    rows grow downward). Self-collision is ignored.
    """

    def __init__(self, grid: OccupancyGrid, base: Sequence[float], link_lengths: Sequence[float]):
        super().__init__()
        lengths = [float(v) for v in link_lengths]
        if len(lengths) < 2:
            raise ContractViolation("an arm needs at least two links")
        if any(not (v > 0 and math.isfinite(v)) for v in lengths):
            raise ContractViolation(f"link lengths must be positive, got {lengths}")
        bx, by = (float(v) for v in base)
        if not (0 <= bx < grid.width and 0 <= by < grid.height):
            raise ContractViolation(f"arm base {(bx, by)} lies outside the grid")
        self.grid = grid
        self.base = (bx, by)
        self.link_lengths = tuple(lengths)
        self.dim = len(lengths)
        self.bounds = Bounds([-math.pi] * self.dim, [math.pi] * self.dim)
        # A joint-space step of length r moves any point of the arm by at
        # most r * sqrt(sum_j reach_j**2), reach_j being the chain length
        # beyond joint j (Cauchy-Schwarz on sum_j |dq_j| * reach_j). Keep
        # that under one pixel.
        reaches = [sum(lengths[j:]) for j in range(len(lengths))]
        self.resolution = 1.0 / math.sqrt(sum(r * r for r in reaches))

    def forward_kinematics(self, q) -> list[tuple[float, float]]:
        q = self._as_checked(q).tolist()
        return self._fk(q)

    def _fk(self, q) -> list[tuple[float, float]]:
        x, y = self.base
        pts = [(x, y)]
        heading = 0.0
        for angle, length in zip(q, self.link_lengths):
            heading += angle
            x += length * math.cos(heading)
            y += length * math.sin(heading)
            pts.append((x, y))
        return pts

    def _free(self, q) -> bool:
        for v in q:
            if not -math.pi <= v <= math.pi:
                return False
        grid = self.grid
        occupied = grid.is_occupied
        floor = math.floor
        pts = self._fk(q)
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            # exact fast accept: the padded bounding box holds every
            # supercover cell, corner neighbours included
            if x0 < x1:
                bx0, bx1 = floor(x0) - 1, floor(x1) + 1
            else:
                bx0, bx1 = floor(x1) - 1, floor(x0) + 1
            if y0 < y1:
                by0, by1 = floor(y0) - 1, floor(y1) + 1
            else:
                by0, by1 = floor(y1) - 1, floor(y0) + 1
            if grid.box_free(bx0, by0, bx1, by1):
                continue
            for cx, cy in segment_cells(x0, y0, x1, y1):
                if occupied(cx, cy):
                    return False
        return True


def is_free_config(env: EnvModel, q: Configuration) -> bool:
    return env.is_free_config(q)


def is_free_motion(env: EnvModel, a: Configuration, b: Configuration) -> bool:
    return env.is_free_motion(a, b)


def forward_kinematics(arm: PlanarArmEnv, q: Configuration) -> list[tuple[float, float]]:
    return arm.forward_kinematics(q)
