"""Samplers: where the next candidate configuration comes from.

Planners only talk to the :class:`Sampler` interface, so any sampler can
be paired with any planner. RNG consumption per ``next`` call (``d`` is
the dimension; see :mod:`plankit.rng` for per-draw costs):

* ``UniformSampler``: ``d`` uniform draws.
* ``GoalBiasedSampler``: one uniform draw for the bias coin, then ``d``
  more only when the goal was not chosen.
* ``InformedSampler``: ``d`` draws while no solution is known; otherwise
  ``2d + 1`` draws per attempt (``d`` normals, one radius), repeated until
  the sample lands inside the bounds.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from .cspace import Bounds, Configuration, as_config, distance
from .errors import ContractViolation, SamplerExhaustedError
from .rng import Rng

MAX_REJECTIONS = 1000


@dataclass
class SamplerContext:
    """What a sampler may know about the planning problem."""

    bounds: Bounds
    start: Configuration
    goal: Configuration
    best_cost: float = math.inf

    def __post_init__(self):
        self.start = as_config(self.start)
        self.goal = as_config(self.goal)
        if self.start.shape[0] != self.bounds.dim or self.goal.shape[0] != self.bounds.dim:
            raise ContractViolation("start/goal dimension does not match the bounds")


class Sampler(ABC):
    """Base class for all samplers.

    ``report`` is the feedback hook: the owning planner calls it once it
    knows whether the last sample was used. Built-in samplers only count
    the calls.
    """

    name = "abstract"

    def __init__(self):
        self.next_count = 0
        self.report_count = 0
        self.accepted_count = 0

    def next(self, ctx: SamplerContext, rng: Rng) -> Configuration:
        self.next_count += 1
        return self._draw(ctx, rng)

    @abstractmethod
    def _draw(self, ctx: SamplerContext, rng: Rng) -> Configuration:
        ...

    def report(self, accepted: bool) -> None:
        self.report_count += 1
        if accepted:
            self.accepted_count += 1


def uniform_point(bounds: Bounds, rng: Rng) -> Configuration:
    return as_config([rng.uniform(lo, hi) for lo, hi in zip(bounds.lo.tolist(), bounds.hi.tolist())])


class UniformSampler(Sampler):
    name = "uniform"

    def _draw(self, ctx, rng):
        return uniform_point(ctx.bounds, rng)


class GoalBiasedSampler(Sampler):
    """Returns the goal with probability ``p_goal``, else a uniform sample."""

    name = "goal_biased"

    def __init__(self, p_goal: float = 0.05):
        super().__init__()
        if not 0.0 <= p_goal <= 1.0:
            raise ContractViolation(f"p_goal must lie in [0, 1], got {p_goal}")
        self.p_goal = p_goal
        self.goal_count = 0

    def _draw(self, ctx, rng):
        if rng.random() < self.p_goal:
            self.goal_count += 1
            return ctx.goal
        return uniform_point(ctx.bounds, rng)


def unit_ball_point(dim: int, rng: Rng) -> np.ndarray:
    """Uniform point in the unit ``dim``-ball (normalised Gaussian, radius ``U**(1/d)``)."""
    while True:
        g = np.array([rng.normal() for _ in range(dim)])
        norm = float(np.sqrt(np.sum(g * g)))
        if norm > 0.0:
            break
    return g / norm * rng.random() ** (1.0 / dim)


def rotation_to_axis(direction: np.ndarray) -> np.ndarray:
    """A proper rotation matrix ``R`` with ``R @ e1 == direction`` (unit vector)."""
    d = direction.shape[0]
    e1 = np.zeros(d)
    e1[0] = 1.0
    v = e1 - direction
    nv = float(np.dot(v, v))
    if nv < 1e-30:
        return np.eye(d)
    house = np.eye(d) - 2.0 * np.outer(v, v) / nv
    # the reflection has det -1; flipping the last axis first restores det +1
    flip = np.ones(d)
    flip[-1] = -1.0
    return house * flip


class InformedSampler(Sampler):
    """Uniform sampling of the prolate hyperspheroid of cheaper solutions.

    Until a solution exists it falls back to uniform sampling over the
    bounds.
    """

    name = "informed"

    def __init__(self, max_rejections: int = MAX_REJECTIONS):
        super().__init__()
        self.max_rejections = max_rejections
        self._frame_key = None
        self._frame = None

    def _ellipse_frame(self, ctx: SamplerContext):
        key = (ctx.start.tobytes(), ctx.goal.tobytes())
        if key != self._frame_key:
            c_min = distance(ctx.start, ctx.goal)
            if c_min > 0:
                rot = rotation_to_axis((ctx.goal - ctx.start) / c_min)
            else:
                rot = np.eye(ctx.start.shape[0])
            self._frame_key = key
            self._frame = (c_min, rot, 0.5 * (ctx.start + ctx.goal))
        return self._frame

    def _draw(self, ctx, rng):
        if math.isinf(ctx.best_cost):
            return uniform_point(ctx.bounds, rng)
        c_min, rot, centre = self._ellipse_frame(ctx)
        c_best = ctx.best_cost
        if c_best < c_min:
            if c_min - c_best > 1e-9 * max(1.0, c_min):
                raise ContractViolation(
                    f"best cost {c_best} is below the start-goal distance {c_min}"
                )
            c_best = c_min
        dim = ctx.start.shape[0]
        radii = np.full(dim, 0.5 * math.sqrt(max(c_best * c_best - c_min * c_min, 0.0)))
        radii[0] = 0.5 * c_best
        transform = rot * radii
        for _ in range(self.max_rejections):
            q = transform @ unit_ball_point(dim, rng) + centre
            if ctx.bounds.contains(q):
                return as_config(q)
        raise SamplerExhaustedError(
            f"informed sampler rejected {self.max_rejections} consecutive out-of-bounds samples"
        )


def uniform_next(ctx: SamplerContext, rng: Rng) -> Configuration:
    return uniform_point(ctx.bounds, rng)


def goal_biased_next(ctx: SamplerContext, rng: Rng, p_goal: float) -> Configuration:
    return GoalBiasedSampler(p_goal)._draw(ctx, rng)


def informed_next(ctx: SamplerContext, rng: Rng) -> Configuration:
    return InformedSampler()._draw(ctx, rng)


def report(sampler: Sampler, accepted: bool) -> None:
    sampler.report(accepted)
