"""Sampling-based motion planning with pluggable samplers and planners."""

from .cspace import Bounds, as_config, distance, interpolate, steer
from .env import OccupancyGrid, PlanarArmEnv, PointMassEnv, load_grid
from .planners import PRM, RRT, PlanRequest, PlanResult, RRTConnect, RRTStar
from .registry import create_planner, create_sampler, list_planners, list_samplers
from .rng import Rng
from .samplers import GoalBiasedSampler, InformedSampler, SamplerContext, UniformSampler

__version__ = "0.1.0"

__all__ = [
    "Bounds",
    "GoalBiasedSampler",
    "InformedSampler",
    "OccupancyGrid",
    "PRM",
    "PlanRequest",
    "PlanResult",
    "PlanarArmEnv",
    "PointMassEnv",
    "RRT",
    "RRTConnect",
    "RRTStar",
    "Rng",
    "SamplerContext",
    "UniformSampler",
    "as_config",
    "create_planner",
    "create_sampler",
    "distance",
    "interpolate",
    "list_planners",
    "list_samplers",
    "load_grid",
    "steer",
]
