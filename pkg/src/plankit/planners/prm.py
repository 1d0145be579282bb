"""Probabilistic roadmap with k-nearest wiring."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from ..cspace import Configuration, distance
from .base import Planner, PlanRequest
from .nn import LinearIndex


@dataclass
class Roadmap:
    """Undirected graph over free configurations, weighted by distance."""

    vertices: list = field(default_factory=list)
    adjacency: list = field(default_factory=list)
    start_id: int | None = None
    goal_id: int | None = None

    def add_vertex(self, q: Configuration) -> int:
        self.vertices.append(q)
        self.adjacency.append({})
        return len(self.vertices) - 1

    def add_edge(self, i: int, j: int) -> None:
        w = distance(self.vertices[i], self.vertices[j])
        self.adjacency[i][j] = w
        self.adjacency[j][i] = w

    def edges(self) -> list[tuple[int, int, float]]:
        """Each undirected edge once as ``(i, j, weight)`` with ``i < j``, sorted."""
        return sorted(
            (i, j, w) for i, nbrs in enumerate(self.adjacency) for j, w in nbrs.items() if i < j
        )


def shortest_path(roadmap: Roadmap, source: int, target: int) -> list[int]:
    """Uniform-cost search; vertex ids of a cheapest path, or [] if disconnected."""
    dist = {source: 0.0}
    prev: dict[int, int] = {}
    heap = [(0.0, source)]
    done = set()
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == target:
            ids = [u]
            while ids[-1] != source:
                ids.append(prev[ids[-1]])
            return ids[::-1]
        for v, w in sorted(roadmap.adjacency[u].items()):
            nd = d + w
            if v not in done and nd < dist.get(v, float("inf")):
                dist[v] = nd
                prev[v] = u
                heapq.heappush(heap, (nd, v))
    return []


class PRM(Planner):
    """Roadmap planner.

    The whole sample budget is drawn first; samples in collision, and
    exact duplicates of an existing vertex, are discarded. Each vertex is
    then wired to its ``prm_k`` nearest neighbours where the straight
    motion is free. Start and goal are inserted last with the same wiring
    and connected by a uniform-cost search.
    """

    name = "prm"

    def _plan(self, req: PlanRequest):
        env, k = req.env, req.prm_k
        if k < 1:
            raise ValueError(f"prm_k must be at least 1, got {k}")
        roadmap = Roadmap()
        index = LinearIndex(env.dim)
        self.roadmap = roadmap

        while self.stats.samples_drawn < req.max_nodes:
            self.stats.iterations += 1
            q = self._sample(req)
            fresh = index.size == 0 or distance(index.points[index.nearest(q)], q) > 0.0
            if fresh and env.is_free_config(q):
                index.add(q)
                roadmap.add_vertex(q)
                self.stats.nodes_added += 1
                req.sampler.report(True)
            else:
                req.sampler.report(False)

        tried: set[tuple[int, int]] = set()
        for i in range(len(roadmap.vertices)):
            self._wire(roadmap, index, i, k, tried, env)

        for label, q in (("start_id", req.start), ("goal_id", req.goal)):
            vid = roadmap.add_vertex(q)
            index.add(q)
            setattr(roadmap, label, vid)
            self._wire(roadmap, index, vid, k, tried, env)

        self.stats.nn_queries = index.queries
        ids = shortest_path(roadmap, roadmap.start_id, roadmap.goal_id)
        return [roadmap.vertices[i] for i in ids], roadmap

    @staticmethod
    def _wire(roadmap, index, i, k, tried, env) -> None:
        q = roadmap.vertices[i]
        for j in index.k_nearest(q, k, exclude=i):
            key = (min(i, j), max(i, j))
            if key in tried:
                continue
            tried.add(key)
            if env.is_free_motion(q, roadmap.vertices[j]):
                roadmap.add_edge(i, j)
