from .base import Planner, PlannerStats, PlanRequest, PlanResult, path_cost
from .prm import PRM, Roadmap, shortest_path
from .rrt import RRT, RRTStar
from .rrt_connect import RRTConnect
from .tree import MotionTree, Node, extract_path, near, nearest

__all__ = [
    "MotionTree",
    "Node",
    "PRM",
    "PlanRequest",
    "PlanResult",
    "Planner",
    "PlannerStats",
    "RRT",
    "RRTConnect",
    "RRTStar",
    "Roadmap",
    "extract_path",
    "near",
    "nearest",
    "path_cost",
    "shortest_path",
]


def _solve_with(cls):
    def solve(req: PlanRequest) -> PlanResult:
        return cls().solve(req)

    solve.__name__ = f"{cls.name}_solve"
    solve.__doc__ = f"Run a fresh :class:`{cls.__name__}` on ``req``."
    return solve


rrt_solve = _solve_with(RRT)
rrt_star_solve = _solve_with(RRTStar)
rrt_connect_solve = _solve_with(RRTConnect)
prm_solve = _solve_with(PRM)
