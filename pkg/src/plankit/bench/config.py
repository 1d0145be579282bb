"""JSON run and benchmark configurations.

A single run::

    {"map_path": "maps/empty.pgm", "planner": "rrt",
     "start": [10, 10], "goal": [90, 90], "seed": 7}

A benchmark is a list of run templates crossed with planner names and
seeds::

    {"templates": [{"id": "empty", "map_path": "maps/empty.pgm",
                    "start": [10, 10], "goal": [90, 90]}],
     "planners": ["rrt", "rrt_star"],
     "seeds": {"start": 1, "count": 20}}

``seeds`` may also be an explicit list. Unknown keys are rejected
everywhere. Relative map paths resolve against ``base_dir``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from pathlib import Path

from ..errors import ConfigError
from ..registry import Registry, default_registry

DEFAULTS = {
    "eps": 10.0,
    "goal_radius": 10.0,
    "p_goal": 0.05,
    "max_nodes": 2000,
    "prm_k": 10,
    "rewire_multiplier": 6.0,
}

_U64_MAX = (1 << 64) - 1


@dataclass(frozen=True)
class PlanConfig:
    map_path: str
    planner: str
    start: tuple
    goal: tuple
    env_kind: str = "point"
    arm_base: tuple | None = None
    link_lengths: tuple | None = None
    sampler: str = "goal_biased"
    seed: int = 0
    max_nodes: int = DEFAULTS["max_nodes"]
    eps: float = DEFAULTS["eps"]
    goal_radius: float = DEFAULTS["goal_radius"]
    p_goal: float = DEFAULTS["p_goal"]
    prm_k: int = DEFAULTS["prm_k"]
    rewire_multiplier: float = DEFAULTS["rewire_multiplier"]
    config_id: str = "run"
    svg_path: str | None = None
    record_path: str | None = None


@dataclass(frozen=True)
class BenchmarkSpec:
    templates: tuple
    planners: tuple
    seeds: tuple

    def runs(self) -> list[PlanConfig]:
        """Every run in canonical order: template, then planner, then seed."""
        return [
            replace(t, planner=p, seed=s)
            for t in self.templates
            for p in self.planners
            for s in sorted(self.seeds)
        ]


_RUN_KEYS = {
    "id", "map_path", "env_kind", "arm", "planner", "sampler", "start", "goal", "seed",
    "max_nodes", "eps", "goal_radius", "p_goal", "prm_k", "rewire_multiplier",
    "svg_path", "record_path",
}
_TEMPLATE_KEYS = _RUN_KEYS - {"planner", "seed", "svg_path", "record_path"}
_ARM_KEYS = {"base", "link_lengths"}
_BENCH_KEYS = {"templates", "planners", "seeds"}


def _fail(path: str, msg: str):
    raise ConfigError(f"{path}: {msg}" if path else msg)


def _join(prefix: str, key) -> str:
    if isinstance(key, int):
        return f"{prefix}[{key}]"
    return f"{prefix}.{key}" if prefix else key


def _check_keys(obj, allowed: set, path: str) -> None:
    if not isinstance(obj, dict):
        _fail(path, "expected a JSON object")
    for key in obj:
        if key not in allowed:
            _fail(_join(path, key), "unknown key")


def _number(obj, key, path, *, positive=False, minimum=None, maximum=None, integer=False):
    where = _join(path, key)
    value = obj.get(key, DEFAULTS.get(key))
    if value is None:
        _fail(where, "is required")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(where, f"expected a number, got {json.dumps(value)}")
    if integer and not isinstance(value, int):
        _fail(where, f"expected an integer, got {value}")
    if not math.isfinite(value):
        _fail(where, "must be finite")
    if positive and not value > 0:
        _fail(where, f"must be positive, got {value}")
    if minimum is not None and value < minimum:
        _fail(where, f"must be at least {minimum}, got {value}")
    if maximum is not None and value > maximum:
        _fail(where, f"must be at most {maximum}, got {value}")
    return value if integer else float(value)


def _vector(value, where: str, length: int | None = None) -> tuple:
    if not isinstance(value, list) or not value:
        _fail(where, "expected a non-empty list of numbers")
    for i, v in enumerate(value):
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
            _fail(_join(where, i), f"expected a finite number, got {json.dumps(v)}")
    if length is not None and len(value) != length:
        _fail(where, f"expected {length} coordinates, got {len(value)}")
    return tuple(float(v) for v in value)


def _name(obj, key, path, registry: Registry, kind: str, default=None) -> str:
    where = _join(path, key)
    value = obj.get(key, default)
    if value is None:
        _fail(where, "is required")
    if not isinstance(value, str):
        _fail(where, f"expected a string, got {json.dumps(value)}")
    if kind == "planner":
        exists, names = registry.has_planner, registry.list_planners
    else:
        exists, names = registry.has_sampler, registry.list_samplers
    if not exists(value):
        _fail(where, f"unknown {kind} {value!r}; available: {', '.join(names())}")
    return value


def _run_config(obj, path: str, base_dir: Path | None, registry: Registry, *, template=False, index=0):
    _check_keys(obj, _TEMPLATE_KEYS if template else _RUN_KEYS, path)
    cfg_id = obj.get("id", f"t{index}" if template else "run")
    if not isinstance(cfg_id, str) or not cfg_id:
        _fail(_join(path, "id"), "expected a non-empty string")

    map_path = obj.get("map_path")
    if not isinstance(map_path, str) or not map_path:
        _fail(_join(path, "map_path"), "is required and must be a string")
    if base_dir is not None and not Path(map_path).is_absolute():
        map_path = str(Path(base_dir) / map_path)

    env_kind = obj.get("env_kind", "point")
    if env_kind not in ("point", "arm"):
        _fail(_join(path, "env_kind"), f"expected 'point' or 'arm', got {json.dumps(env_kind)}")
    arm_base = link_lengths = None
    if env_kind == "arm":
        arm = obj.get("arm")
        where = _join(path, "arm")
        if arm is None:
            _fail(where, "is required when env_kind is 'arm'")
        _check_keys(arm, _ARM_KEYS, where)
        if "base" not in arm or "link_lengths" not in arm:
            _fail(where, "needs both 'base' and 'link_lengths'")
        arm_base = _vector(arm["base"], _join(where, "base"), 2)
        link_lengths = _vector(arm["link_lengths"], _join(where, "link_lengths"))
        if len(link_lengths) < 2:
            _fail(_join(where, "link_lengths"), "an arm needs at least two links")
        for i, v in enumerate(link_lengths):
            if not v > 0:
                _fail(_join(_join(where, "link_lengths"), i), f"must be positive, got {v}")
        dim = len(link_lengths)
    else:
        if "arm" in obj:
            _fail(_join(path, "arm"), "only valid when env_kind is 'arm'")
        dim = 2

    for key in ("start", "goal"):
        if key not in obj:
            _fail(_join(path, key), "is required")
    start = _vector(obj["start"], _join(path, "start"), dim)
    goal = _vector(obj["goal"], _join(path, "goal"), dim)

    planner = "" if template else _name(obj, "planner", path, registry, "planner")
    sampler = _name(obj, "sampler", path, registry, "sampler", "goal_biased")

    seed = 0
    if not template:
        seed = obj.get("seed", 0)
        if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed <= _U64_MAX:
            _fail(_join(path, "seed"), "expected an unsigned 64-bit integer")

    outputs = {}
    for key in ("svg_path", "record_path"):
        value = obj.get(key)
        if value is not None and not isinstance(value, str):
            _fail(_join(path, key), "expected a string path")
        if value is not None and base_dir is not None and not Path(value).is_absolute():
            value = str(Path(base_dir) / value)
        outputs[key] = value

    return PlanConfig(
        map_path=map_path,
        planner=planner,
        start=start,
        goal=goal,
        env_kind=env_kind,
        arm_base=arm_base,
        link_lengths=link_lengths,
        sampler=sampler,
        seed=seed,
        max_nodes=_number(obj, "max_nodes", path, integer=True, minimum=1),
        eps=_number(obj, "eps", path, positive=True),
        goal_radius=_number(obj, "goal_radius", path, minimum=0),
        p_goal=_number(obj, "p_goal", path, minimum=0, maximum=1),
        prm_k=_number(obj, "prm_k", path, integer=True, minimum=1),
        rewire_multiplier=_number(obj, "rewire_multiplier", path, positive=True),
        config_id=cfg_id,
        **outputs,
    )


def _seeds(value, where: str) -> tuple:
    if isinstance(value, dict):
        _check_keys(value, {"start", "count"}, where)
        start, count = value.get("start", 0), value.get("count")
        for key, v in (("start", start), ("count", count)):
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                _fail(_join(where, key), "expected a non-negative integer")
        if count < 1:
            _fail(_join(where, "count"), "must be at least 1")
        seeds = list(range(start, start + count))
    elif isinstance(value, list) and value:
        for i, v in enumerate(value):
            if isinstance(v, bool) or not isinstance(v, int):
                _fail(_join(where, i), "expected an integer seed")
        seeds = value
        if len(set(seeds)) != len(seeds):
            _fail(where, "seeds must be distinct")
    else:
        _fail(where, "expected a non-empty list or {\"start\", \"count\"}")
    if any(not 0 <= s <= _U64_MAX for s in seeds):
        _fail(where, "seeds must be unsigned 64-bit integers")
    return tuple(seeds)


def parse_config(json_text: str, base_dir=None, registry: Registry | None = None):
    """Parse and validate a run (:class:`PlanConfig`) or benchmark (:class:`BenchmarkSpec`)."""
    registry = registry or default_registry
    try:
        obj = json.loads(json_text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(obj, dict):
        _fail("", "top-level JSON value must be an object")
    base = Path(base_dir) if base_dir is not None else None

    if "templates" not in obj:
        return _run_config(obj, "", base, registry)

    _check_keys(obj, _BENCH_KEYS, "")
    templates = obj["templates"]
    if not isinstance(templates, list) or not templates:
        _fail("templates", "expected a non-empty list")
    parsed = tuple(
        _run_config(t, f"templates[{i}]", base, registry, template=True, index=i)
        for i, t in enumerate(templates)
    )
    ids = [t.config_id for t in parsed]
    if len(set(ids)) != len(ids):
        _fail("templates", "template ids must be unique")

    planners = obj.get("planners")
    if not isinstance(planners, list) or not planners:
        _fail("planners", "expected a non-empty list of planner names")
    for i, name in enumerate(planners):
        if not isinstance(name, str) or not registry.has_planner(name):
            _fail(
                f"planners[{i}]",
                f"unknown planner {name!r}; available: {', '.join(registry.list_planners())}",
            )
    if len(set(planners)) != len(planners):
        _fail("planners", "planner names must be distinct")
    if "seeds" not in obj:
        _fail("seeds", "is required")
    return BenchmarkSpec(parsed, tuple(planners), _seeds(obj["seeds"], "seeds"))
