"""Command-line front end.

Exit codes: 0 when the run completed (whether or not a path was found),
2 for configuration or input errors, 3 for internal errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from ..errors import ConfigError, InvalidRequestError, NetpbmError
from ..registry import list_planners, list_samplers
from .config import BenchmarkSpec, PlanConfig, parse_config
from .runner import records_to_csv, run_benchmark, run_single, summary_to_json

log = logging.getLogger("plankit")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class InputError(Exception):
    pass


def _load(path: str, want):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read config {path}: {exc.strerror}") from None
    cfg = parse_config(text, base_dir=Path(path).resolve().parent)
    if not isinstance(cfg, want):
        kind = "a benchmark" if want is BenchmarkSpec else "a single-run"
        raise InputError(f"{path} is not {kind} configuration")
    return cfg


def _cmd_plan(args) -> int:
    cfg = _load(args.config, PlanConfig)
    rec, _ = run_single(cfg, svg=args.svg, record=args.out)
    if not (args.out or cfg.record_path):
        sys.stdout.write(rec.to_json())
    log.info("success=%s cost=%s samples=%d", rec.success, rec.cost, rec.samples_drawn)
    return EXIT_OK


def _cmd_render(args) -> int:
    cfg = _load(args.config, PlanConfig)
    rec, _ = run_single(cfg, svg=args.svg, record=args.out)
    log.info("rendered %s (success=%s)", args.svg, rec.success)
    return EXIT_OK


def _cmd_benchmark(args) -> int:
    spec = _load(args.config, BenchmarkSpec)
    records, summary = run_benchmark(spec, parallelism=args.jobs)
    Path(args.out).write_text(records_to_csv(records), encoding="utf-8")
    if args.summary:
        Path(args.summary).write_text(summary_to_json(summary), encoding="utf-8")
    for row in summary:
        log.info(
            "%s/%s: success %.2f, median cost %s",
            row["config_id"],
            row["planner"],
            row["success_rate"],
            row["cost_median"],
        )
    return EXIT_OK


def _cmd_list(args) -> int:
    print("planners: " + ", ".join(list_planners()))
    print("samplers: " + ", ".join(list_samplers()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plankit", description="Sampling-based motion planning bench.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plan", help="run a single plan")
    p.add_argument("--config", required=True)
    p.add_argument("--svg", help="write an SVG of the run")
    p.add_argument("--out", help="write the JSON run record here instead of stdout")
    p.set_defaults(func=_cmd_plan)

    p = sub.add_parser("benchmark", help="run a benchmark with rendering off")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True, help="CSV with one row per run")
    p.add_argument("--summary", help="JSON summary per (template, planner)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_benchmark)

    p = sub.add_parser("list", help="list registered planners and samplers")
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("render", help="re-run a config and render it")
    p.add_argument("--config", required=True)
    p.add_argument("--svg", required=True)
    p.add_argument("--out", help="also write the JSON run record")
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (ConfigError, InvalidRequestError, NetpbmError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
