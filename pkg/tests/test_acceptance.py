"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import csv
import io
import json
import math
import random
import statistics
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE, write_map
from plankit.bench import RENDER_CALLS, parse_config, records_to_csv, run_benchmark, run_single
from plankit.bench.cli import main
from plankit.cspace import as_config, distance, interpolate, steer
from plankit.env import OccupancyGrid, PlanarArmEnv, PointMassEnv
from plankit.errors import NotFoundError, RegistrationConflictError
from plankit.planners import PRM, RRT, RRTConnect, RRTStar, PlanRequest
from plankit.registry import Registry, with_builtins
from plankit.rng import Rng
from plankit.samplers import GoalBiasedSampler
from test_env import compare_with_fine_oracle, random_grid, random_segment
from test_planners import random_tree, scan_near, scan_nearest

TOL = 1e-9
OPTIMUM = 80 * math.sqrt(2)
EMPTY = OccupancyGrid.empty(100, 100)
ARM_GRID = OccupancyGrid.empty(200, 200)
ARM_BASE = (100, 100)
ARM_LINKS = (20, 20, 20, 20)


def verdict(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: {detail}"
    print(line)
    ACCEPTANCE.append(line)
    assert ok, line


def point_request(seed, max_nodes=2000, **kw):
    return PlanRequest(PointMassEnv(EMPTY), GoalBiasedSampler(0.05), (10, 10), (90, 90),
                       Rng(seed), max_nodes=max_nodes, eps=10, goal_radius=10, **kw)


def arm_request(seed, max_nodes=2000):
    env = PlanarArmEnv(ARM_GRID, ARM_BASE, ARM_LINKS)
    return PlanRequest(env, GoalBiasedSampler(0.05), (0,) * 4, (math.pi / 4,) * 4,
                       Rng(seed), max_nodes=max_nodes, eps=0.3, goal_radius=0.3)


def test_c01_metric_and_steering():
    rng = np.random.default_rng(1)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(10_000):
        d = int(rng.integers(2, 7))
        a, b, c = (as_config(rng.uniform(-100, 100, d)) for _ in range(3))
        worst = max(worst, distance(a, c) - distance(a, b) - distance(b, c))
    tri_ok = worst <= TOL

    steer_bad = 0
    for _ in range(10_000):
        d = int(rng.integers(2, 7))
        a, b = as_config(rng.uniform(-100, 100, d)), as_config(rng.uniform(-100, 100, d))
        eps = float(rng.uniform(0.01, 200))
        q = steer(a, b, eps)
        gap = distance(a, b)
        if gap <= eps:
            steer_bad += not np.array_equal(q, b)
        else:
            along = a + (b - a) * (eps / gap)
            steer_bad += abs(distance(a, q) - eps) > TOL or np.max(np.abs(q - along)) > TOL

    lin_bad = 0
    for _ in range(10_000):
        d = int(rng.integers(2, 7))
        a, b = as_config(rng.uniform(-100, 100, d)), as_config(rng.uniform(-100, 100, d))
        t = float(rng.uniform(0, 1))
        q = interpolate(a, b, t)
        lin_bad += np.max(np.abs(q - (a + t * (b - a)))) > TOL
        lin_bad += abs(distance(a, q) - t * distance(a, b)) > TOL
    elapsed = time.perf_counter() - t0
    verdict(1, "metric/steering suite", tri_ok and not steer_bad and not lin_bad and elapsed < 5,
            f"triangle slack {worst:.2e}, steer failures {steer_bad}, "
            f"interpolation failures {lin_bad}, {elapsed:.2f}s")


def test_c02_collision_oracle_equivalence():
    rng = random.Random(2)
    t0 = time.perf_counter()
    total = disagree = unexcused = 0
    for _ in range(50):
        grid = random_grid(rng)
        env = PointMassEnv(grid)
        for _ in range(1000):
            a, b = random_segment(rng, grid)
            agree, excused = compare_with_fine_oracle(grid, env, a, b)
            total += 1
            if not agree:
                disagree += 1
                unexcused += not excused
                print(f"  disagreement {a.tolist()} -> {b.tolist()} excused={excused}")
    elapsed = time.perf_counter() - t0
    rate = disagree / total
    verdict(2, "collision oracle equivalence", unexcused == 0 and rate < 0.005 and elapsed < 60,
            f"{disagree}/{total} disagreements ({rate:.3%}), {unexcused} outside the "
            f"pixel-boundary set, {elapsed:.1f}s")


def test_c03_nn_equivalence():
    rng = random.Random(3)
    t0 = time.perf_counter()
    mismatches = 0
    for _ in range(1000):
        tree = random_tree(rng, rng.randint(1, 2000), dim=rng.choice((2, 4)))
        dim = tree.nodes[0].config.size
        for _ in range(3):
            q = as_config([rng.uniform(-10, 110) for _ in range(dim)])
            r = rng.uniform(0, 40)
            mismatches += tree.index.nearest(q) != scan_nearest(tree, q)
            mismatches += tree.index.near(q, r) != scan_near(tree, q, r)
    elapsed = time.perf_counter() - t0
    verdict(3, "nn-index equivalence", mismatches == 0 and elapsed < 60,
            f"{mismatches} mismatches over 1000 trees, {elapsed:.1f}s")


def test_c04_probabilistic_completeness():
    t0 = time.perf_counter()
    wins = {}
    for name, planner, kw in [("rrt", RRT, {}), ("rrt_connect", RRTConnect, {}),
                              ("prm", PRM, {"max_nodes": 200, "prm_k": 10})]:
        wins[name] = sum(planner().solve(point_request(s, **kw)).success for s in range(100))
    elapsed = time.perf_counter() - t0
    ok = all(w >= 95 for w in wins.values()) and elapsed < 120
    verdict(4, "probabilistic completeness", ok,
            ", ".join(f"{k} {v}/100" for k, v in wins.items()) + f", {elapsed:.1f}s")


def test_c05_asymptotic_optimality_trend():
    t0 = time.perf_counter()
    finals, monotone = [], True
    for seed in range(20):
        res = RRTStar().solve(point_request(seed, max_nodes=3000))
        costs = [c for _, c in res.cost_history]
        monotone &= res.success and all(b <= a for a, b in zip(costs, costs[1:]))
        monotone &= costs[-1] == res.cost
        finals.append(res.cost)
    elapsed = time.perf_counter() - t0
    median = statistics.median(finals)
    ok = median <= 1.05 * 113.137 and monotone and elapsed < 120
    verdict(5, "asymptotic-optimality trend", ok,
            f"median {median:.3f} vs bound {1.05 * 113.137:.3f} (optimum {OPTIMUM:.3f}), "
            f"non-increasing={monotone}, {elapsed:.1f}s")


def test_c06_rrt_star_dominance():
    both = violations = 0
    for seed in range(100):
        a = RRT().solve(point_request(seed))
        b = RRTStar().solve(point_request(seed))
        if a.success and b.success:
            both += 1
            violations += b.cost > a.cost
    verdict(6, "RRT* per-seed dominance", violations == 0 and both > 0,
            f"{violations} violations over {both} seeds where both succeed")


def plan_json(map_path, planner, env_kind):
    obj = {"map_path": str(map_path), "planner": planner, "seed": 11, "max_nodes": 300}
    if env_kind == "arm":
        obj.update(env_kind="arm", arm={"base": list(ARM_BASE), "link_lengths": list(ARM_LINKS)},
                   start=[0, 0, 0, 0], goal=[math.pi / 4] * 4, eps=0.3, goal_radius=0.3)
    else:
        obj.update(start=[10, 10], goal=[90, 90])
    return json.dumps(obj)


def drop_wall_time(doc):
    obj = json.loads(doc)
    obj.pop("wall_time")
    return json.dumps(obj)


def csv_without_wall_time(text):
    rows = list(csv.reader(io.StringIO(text)))
    col = rows[0].index("wall_time")
    return [r[:col] + r[col + 1:] for r in rows]


def test_c07_determinism(tmp_path):
    maps = {
        "point": write_map(tmp_path / "point.pgm", np.zeros((100, 100), dtype=bool)),
        "arm": write_map(tmp_path / "arm.pgm", np.zeros((200, 200), dtype=bool)),
    }
    failures = []
    planners = ["rrt", "rrt_star", "rrt_connect", "prm"]
    for kind, map_path in maps.items():
        for planner in planners:
            outputs = []
            for trial in range(2):
                cfg = parse_config(plan_json(map_path, planner, kind))
                svg = tmp_path / f"{kind}-{planner}-{trial}.svg"
                rec, _ = run_single(cfg, svg=svg)
                outputs.append((drop_wall_time(rec.to_json()), svg.read_bytes()))
            if outputs[0] != outputs[1]:
                failures.append(f"{kind}/{planner}")
        template = json.loads(plan_json(map_path, "rrt", kind))
        del template["planner"], template["seed"]
        template["id"] = kind
        spec = json.dumps({"templates": [template], "planners": planners, "seeds": [1, 2]})
        tables = [csv_without_wall_time(records_to_csv(run_benchmark(parse_config(spec))[0]))
                  for _ in range(2)]
        if tables[0] != tables[1]:
            failures.append(f"{kind}/benchmark")
    verdict(7, "determinism", not failures,
            f"{len(planners) * 2} plan runs and 2 benchmarks re-run, mismatches: {failures or 'none'}")


def test_c08_cross_backend():
    t0 = time.perf_counter()
    point = RRT().solve(point_request(0))
    arm_wins = sum(RRT().solve(arm_request(s)).success for s in range(100))
    elapsed = time.perf_counter() - t0
    ok = point.success and arm_wins >= 90 and elapsed < 180
    verdict(8, "cross-backend RRT", ok,
            f"point-mass success={point.success}, arm {arm_wins}/100, {elapsed:.1f}s")


def test_c09_registry_contract():
    reg = with_builtins(Registry())
    planners_ok = all(reg.create_planner(n).name == n for n in reg.list_planners())
    planners_ok &= len({type(reg.create_planner(n)) for n in reg.list_planners()}) == 4
    samplers_ok = len({type(reg.create_sampler(n)) for n in reg.list_samplers()}) == 3
    try:
        reg.register_planner("rrt", RRT)
        conflict = False
    except RegistrationConflictError:
        conflict = True
    try:
        reg.create_planner("rtr")
        message = ""
    except NotFoundError as exc:
        message = str(exc)
    message_ok = message == "unknown planner 'rtr'; available: prm, rrt, rrt_connect, rrt_star"
    verdict(9, "registry contract", planners_ok and samplers_ok and conflict and message_ok,
            f"bijection={planners_ok and samplers_ok}, conflict={conflict}, message={message!r}")


def test_c10_visualization_toggle(tmp_path, capsys):
    map_path = write_map(tmp_path / "m.pgm", np.zeros((100, 100), dtype=bool))
    spec = {"templates": [{"id": "m", "map_path": str(map_path), "start": [10, 10],
                           "goal": [90, 90], "max_nodes": 200}],
            "planners": ["rrt", "rrt_star", "rrt_connect", "prm"], "seeds": [1, 2, 3]}
    cfg = tmp_path / "bench.json"
    cfg.write_text(json.dumps(spec))
    before = sum(RENDER_CALLS.values())
    run_benchmark(parse_config(cfg.read_text()))
    code = main(["benchmark", "--config", str(cfg), "--out", str(tmp_path / "r.csv")])
    calls = sum(RENDER_CALLS.values()) - before
    verdict(10, "visualization toggle", calls == 0 and code == 0,
            f"{calls} render calls across 24 benchmark runs, exit code {code}")
