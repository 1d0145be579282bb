"""Single runs and multi-seed benchmarks."""

from __future__ import annotations

import csv
import io
import json
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from pathlib import Path

from ..errors import InvalidRequestError
from ..env import OccupancyGrid, PlanarArmEnv, PointMassEnv, load_grid_file
from ..planners import PlanRequest, PlanResult
from ..registry import Registry, default_registry
from ..rng import Rng
from .config import BenchmarkSpec, PlanConfig

CSV_FIELDS = [
    "config_id",
    "planner",
    "sampler",
    "seed",
    "success",
    "cost",
    "wall_time",
    "nodes_added",
    "samples_drawn",
    "config_checks",
    "motion_checks",
    "invalid_obstacle",
    "invalid_connections",
]


@dataclass
class RunRecord:
    config_id: str
    planner: str
    sampler: str
    seed: int
    success: bool
    cost: float | None  # None when no path was found
    wall_time: float
    nodes_added: int
    samples_drawn: int
    config_checks: int
    motion_checks: int
    invalid_obstacle: int
    invalid_connections: int
    path: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def csv_row(self) -> list[str]:
        """CSV cells; each is the record's JSON encoding of that field (strings bare)."""
        d = self.to_dict()
        return [d[k] if isinstance(d[k], str) else json.dumps(d[k]) for k in CSV_FIELDS]


@lru_cache(maxsize=32)
def _cached_grid(path: str) -> OccupancyGrid:
    return load_grid_file(path)


def build_env(cfg: PlanConfig, grid: OccupancyGrid | None = None):
    grid = grid if grid is not None else _cached_grid(cfg.map_path)
    if cfg.env_kind == "arm":
        return PlanarArmEnv(grid, cfg.arm_base, cfg.link_lengths)
    return PointMassEnv(grid)


def plan(cfg: PlanConfig, registry: Registry | None = None, grid: OccupancyGrid | None = None):
    """Execute one configured run. Returns ``(env, result)``."""
    registry = registry or default_registry
    env = build_env(cfg, grid)
    sampler = registry.create_sampler(cfg.sampler, p_goal=cfg.p_goal)
    planner = registry.create_planner(cfg.planner)
    req = PlanRequest(
        env=env,
        sampler=sampler,
        start=cfg.start,
        goal=cfg.goal,
        rng=Rng(cfg.seed),
        max_nodes=cfg.max_nodes,
        eps=cfg.eps,
        goal_radius=cfg.goal_radius,
        rewire_multiplier=cfg.rewire_multiplier,
        prm_k=cfg.prm_k,
    )
    return env, planner.solve(req)


def make_record(cfg: PlanConfig, result: PlanResult) -> RunRecord:
    s = result.stats
    return RunRecord(
        config_id=cfg.config_id,
        planner=cfg.planner,
        sampler=cfg.sampler,
        seed=cfg.seed,
        success=result.success,
        cost=result.cost if result.success else None,
        wall_time=s.wall_time,
        nodes_added=s.nodes_added,
        samples_drawn=s.samples_drawn,
        config_checks=s.checks.config_checks,
        motion_checks=s.checks.motion_checks,
        invalid_obstacle=s.checks.invalid_obstacle,
        invalid_connections=s.checks.invalid_connections,
        path=[q.tolist() for q in result.path],
    )


def run_single(cfg: PlanConfig, registry: Registry | None = None, svg=None, record=None):
    """Run ``cfg``, write its JSON record and, only if asked, an SVG.

    ``svg`` / ``record`` override the config's output paths. Returns
    ``(record, result)``.
    """
    env, result = plan(cfg, registry)
    rec = make_record(cfg, result)
    record_path = record or cfg.record_path
    if record_path:
        Path(record_path).write_text(rec.to_json(), encoding="utf-8")
    svg_path = svg or cfg.svg_path
    if svg_path:
        from .render import render_svg

        render_svg(env, result.graph, result.path, svg_path, start=cfg.start, goal=cfg.goal)
    return rec, result


def _run_quiet(cfg: PlanConfig) -> RunRecord:
    _, result = plan(cfg)
    return make_record(cfg, result)


def run_benchmark(spec: BenchmarkSpec, parallelism: int = 1, registry: Registry | None = None):
    """Run the full cross product with rendering off.

    Maps are loaded up front, so a bad map aborts before any run. Results
    come back in canonical order (template, planner, ascending seed)
    whatever ``parallelism`` is. Returns ``(records, summary)``.
    """
    if parallelism < 1:
        raise ValueError(f"parallelism must be at least 1, got {parallelism}")
    for t in spec.templates:
        env = build_env(t)
        for label, q in (("start", t.start), ("goal", t.goal)):
            if not env.is_free_config(q):
                raise InvalidRequestError(f"template {t.config_id!r}: {label} {list(q)} is in collision")
    runs = spec.runs()
    if parallelism == 1 or len(runs) == 1:
        records = [make_record(cfg, plan(cfg, registry)[1]) for cfg in runs]
    else:
        # worker processes only see the default registry (plus anything
        # registered at import time), so custom registries run in-process
        if registry is not None and registry is not default_registry:
            records = [make_record(cfg, plan(cfg, registry)[1]) for cfg in runs]
        else:
            with ProcessPoolExecutor(max_workers=parallelism) as pool:
                records = list(pool.map(_run_quiet, runs, chunksize=4))
    return records, summarize(spec, records)


def summarize(spec: BenchmarkSpec, records: list[RunRecord]) -> list[dict]:
    groups: dict[tuple, list[RunRecord]] = {}
    for rec in records:
        groups.setdefault((rec.config_id, rec.planner), []).append(rec)
    out = []
    for template in spec.templates:
        for planner in spec.planners:
            recs = groups.get((template.config_id, planner), [])
            costs = [r.cost for r in recs if r.success]
            out.append(
                {
                    "config_id": template.config_id,
                    "planner": planner,
                    "runs": len(recs),
                    "successes": len(costs),
                    "success_rate": len(costs) / len(recs) if recs else 0.0,
                    "cost_median": statistics.median(costs) if costs else None,
                    "cost_mean": statistics.fmean(costs) if costs else None,
                    "samples_median": statistics.median([r.samples_drawn for r in recs])
                    if recs
                    else None,
                    "config_checks_total": sum(r.config_checks for r in recs),
                    "motion_checks_total": sum(r.motion_checks for r in recs),
                    "invalid_obstacle_total": sum(r.invalid_obstacle for r in recs),
                    "invalid_connections_total": sum(r.invalid_connections for r in recs),
                }
            )
    return out


def records_to_csv(records: list[RunRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for rec in records:
        writer.writerow(rec.csv_row())
    return buf.getvalue()


def summary_to_json(summary: list[dict]) -> str:
    return json.dumps(summary, indent=2) + "\n"
