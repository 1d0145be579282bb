"""SVG rendering of grids, trees, roadmaps and paths.

``RENDER_CALLS`` counts entries into this module's drawing code; the
benchmark runner never touches it, which tests use to confirm that
visualisation is fully off in benchmark mode.
"""

from __future__ import annotations

import base64
import io
from collections import Counter
from pathlib import Path

import numpy as np

from ..env import EnvModel, PlanarArmEnv
from ..planners.prm import Roadmap
from ..planners.tree import MotionTree

RASTER_THRESHOLD = 65_536
RENDER_CALLS: Counter = Counter()


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _pt(p) -> str:
    return f"{_fmt(p[0])},{_fmt(p[1])}"


def _workspace_point(env: EnvModel, q):
    """Where a configuration is drawn: itself, or the arm's end effector."""
    if isinstance(env, PlanarArmEnv):
        return env.forward_kinematics(q)[-1]
    return (float(q[0]), float(q[1]))


def _grid_layer(env: EnvModel) -> list[str]:
    RENDER_CALLS["grid"] += 1
    grid = env.grid
    if grid.width * grid.height > RASTER_THRESHOLD:
        from PIL import Image

        img = Image.fromarray(np.where(grid.cells, 0, 255).astype(np.uint8))
        buf = io.BytesIO()
        img.save(buf, format="PNG")
        data = base64.b64encode(buf.getvalue()).decode("ascii")
        return [
            f'<image id="obstacles" x="0" y="0" width="{grid.width}" height="{grid.height}" '
            f'image-rendering="pixelated" href="data:image/png;base64,{data}"/>'
        ]
    ys, xs = np.nonzero(grid.cells)
    rects = [f'<rect x="{x}" y="{y}" width="1" height="1"/>' for y, x in zip(ys.tolist(), xs.tolist())]
    return ['<g id="obstacles" fill="#000000">', *rects, "</g>"]


def _tree_edges(env: EnvModel, graph) -> list[tuple]:
    RENDER_CALLS["edges"] += 1
    if graph is None:
        return []
    if isinstance(graph, Roadmap):
        verts = graph.vertices
        return [(verts[i], verts[j]) for i, j, _ in graph.edges()]
    trees = [graph] if isinstance(graph, MotionTree) else list(graph)
    edges = []
    for tree in trees:
        for parent, child in tree.edges():
            edges.append((tree.nodes[parent].config, tree.nodes[child].config))
    return edges


def render_svg(env: EnvModel, graph, path, out, start=None, goal=None) -> None:
    """Write a standalone SVG 1.1 document for one planning run.

    ``graph`` is a :class:`MotionTree`, a sequence of trees or a
    :class:`Roadmap` (or None). ``out`` is a path or a writable text stream.
    """
    RENDER_CALLS["render_svg"] += 1
    grid = env.grid
    w, h = grid.width, grid.height
    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}" style="background-color:#ffffff">',
    ]
    lines += _grid_layer(env)

    edges = _tree_edges(env, graph)
    if edges:
        lines.append('<g id="tree" fill="none" stroke="#7f7f7f" stroke-width="1">')
        for a, b in edges:
            pa, pb = _workspace_point(env, a), _workspace_point(env, b)
            lines.append(f'<polyline points="{_pt(pa)} {_pt(pb)}"/>')
        lines.append("</g>")

    if path:
        if isinstance(env, PlanarArmEnv):
            lines.append('<g id="arm" fill="none" stroke="#1f77b4" stroke-width="2">')
            for q in path:
                pts = " ".join(_pt(p) for p in env.forward_kinematics(q))
                lines.append(f'<polyline points="{pts}"/>')
            lines.append("</g>")
        pts = " ".join(_pt(_workspace_point(env, q)) for q in path)
        lines.append(
            f'<polyline id="path" points="{pts}" fill="none" stroke="#d62728" stroke-width="3"/>'
        )

    for label, q, colour in (("start", start, "#2ca02c"), ("goal", goal, "#1f3fbf")):
        if q is not None:
            x, y = _workspace_point(env, q)
            lines.append(f'<circle id="{label}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="2" fill="{colour}"/>')
    lines.append("</svg>")
    text = "\n".join(lines) + "\n"

    if hasattr(out, "write"):
        out.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")
