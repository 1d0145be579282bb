"""Planner interface, requests and results."""

from __future__ import annotations

import math
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ..cspace import Configuration, as_config, distance
from ..env import CheckStats, EnvModel
from ..errors import ContractViolation, InvalidRequestError
from ..rng import Rng
from ..samplers import Sampler, SamplerContext


@dataclass
class PlanRequest:
    env: EnvModel
    sampler: Sampler
    start: Configuration
    goal: Configuration
    rng: Rng
    max_nodes: int = 2000
    eps: float = 10.0
    goal_radius: float = 10.0
    rewire_multiplier: float = 6.0
    prm_k: int = 10

    def __post_init__(self):
        self.start = as_config(self.start)
        self.goal = as_config(self.goal)


@dataclass
class PlannerStats:
    nodes_added: int = 0
    samples_drawn: int = 0
    nn_queries: int = 0
    iterations: int = 0
    wall_time: float = 0.0
    checks: CheckStats = field(default_factory=CheckStats)

    def as_dict(self) -> dict:
        out = {
            "nodes_added": self.nodes_added,
            "samples_drawn": self.samples_drawn,
            "nn_queries": self.nn_queries,
            "iterations": self.iterations,
            "wall_time": self.wall_time,
        }
        out.update(self.checks.as_dict())
        return out


@dataclass
class PlanResult:
    success: bool
    path: list
    cost: float
    stats: PlannerStats
    # planner-specific structure for rendering: a MotionTree, a pair of
    # trees, or a Roadmap
    graph: Any = None
    # (iteration, best cost) each time the best solution improved
    cost_history: list = field(default_factory=list)


def path_cost(path) -> float:
    total = 0.0
    for a, b in zip(path, path[1:]):
        total += distance(a, b)
    return total


class Planner(ABC):
    """Base class for planners.

    Subclasses implement :meth:`_plan`, which returns ``(path, graph)``
    with an empty path on failure. The shared :meth:`solve` validates the
    request, times the run and assembles statistics.
    """

    name = "abstract"
    # optional callable(planner, graph) run after every iteration; for audits
    iteration_hook = None

    def solve(self, req: PlanRequest) -> PlanResult:
        self._validate(req)
        env = req.env
        before = CheckStats(**env.stats.as_dict())
        self.stats = PlannerStats()
        self.cost_history: list = []
        self.ctx = SamplerContext(env.bounds, req.start, req.goal)
        t0 = time.perf_counter()
        path, graph = self._plan(req)
        wall = time.perf_counter() - t0
        after = env.stats
        self.stats.checks = CheckStats(
            config_checks=after.config_checks - before.config_checks,
            motion_checks=after.motion_checks - before.motion_checks,
            invalid_obstacle=after.invalid_obstacle - before.invalid_obstacle,
            invalid_connections=after.invalid_connections - before.invalid_connections,
        )
        self.stats.wall_time = wall
        if path:
            cost = path_cost(path)
            return PlanResult(True, path, cost, self.stats, graph, self.cost_history)
        return PlanResult(False, [], math.inf, self.stats, graph, self.cost_history)

    @staticmethod
    def _validate(req: PlanRequest) -> None:
        env = req.env
        for label, q in (("start", req.start), ("goal", req.goal)):
            if q.shape != (env.dim,):
                raise InvalidRequestError(f"{label} must have dimension {env.dim}")
        if req.max_nodes < 1:
            raise InvalidRequestError(f"max_nodes must be at least 1, got {req.max_nodes}")
        if not req.eps > 0:
            raise InvalidRequestError(f"eps must be positive, got {req.eps}")
        if not req.goal_radius >= 0:
            raise InvalidRequestError(f"goal_radius must be non-negative, got {req.goal_radius}")
        if not env.is_free_config(req.start):
            raise InvalidRequestError(f"start {req.start.tolist()} is in collision")
        if not env.is_free_config(req.goal):
            raise InvalidRequestError(f"goal {req.goal.tolist()} is in collision")

    def _after_iteration(self, graph) -> None:
        if self.iteration_hook is not None:
            self.iteration_hook(self, graph)

    def _sample(self, req: PlanRequest) -> Configuration:
        self.stats.samples_drawn += 1
        return req.sampler.next(self.ctx, req.rng)

    @abstractmethod
    def _plan(self, req: PlanRequest):
        ...


def same_config(a, b) -> bool:
    return bool(np.array_equal(a, b))
