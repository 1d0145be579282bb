from .config import DEFAULTS, BenchmarkSpec, PlanConfig, parse_config
from .render import RENDER_CALLS, render_svg
from .runner import (
    CSV_FIELDS,
    RunRecord,
    plan,
    records_to_csv,
    run_benchmark,
    run_single,
    summarize,
    summary_to_json,
)

__all__ = [
    "CSV_FIELDS",
    "DEFAULTS",
    "RENDER_CALLS",
    "BenchmarkSpec",
    "PlanConfig",
    "RunRecord",
    "parse_config",
    "plan",
    "records_to_csv",
    "render_svg",
    "run_benchmark",
    "run_single",
    "summarize",
    "summary_to_json",
]
