"""Single-tree planners: RRT and RRT*."""

from __future__ import annotations

import math

import numpy as np

from ..cspace import distance, steer
from .base import Planner, PlanRequest, same_config
from .tree import MotionTree, extract_path


class RRT(Planner):
    """Rapidly-exploring random tree; stops at the first path found.

    The goal is reached by a direct motion from the first new node that
    lands within ``goal_radius`` of it.
    """

    name = "rrt"

    def _plan(self, req: PlanRequest):
        env, eps = req.env, req.eps
        tree = MotionTree(req.start)
        self.tree = tree
        if self._direct_to_goal(req, req.start):
            return self._finish(tree, self._attach_goal(tree, req, 0))

        while self.stats.samples_drawn < req.max_nodes:
            self.stats.iterations += 1
            q_rand = self._sample(req)
            near_id = tree.index.nearest(q_rand)
            x_near = tree.nodes[near_id].config
            x_new = steer(x_near, q_rand, eps)
            if same_config(x_new, x_near) or not env.is_free_motion(x_near, x_new):
                req.sampler.report(False)
                continue
            nid = self._insert(tree, req, x_new, near_id)
            req.sampler.report(True)
            if self._direct_to_goal(req, x_new):
                leaf = self._attach_goal(tree, req, nid)
                self.cost_history.append((self.stats.iterations, tree.nodes[leaf].cost))
                return self._finish(tree, leaf)
        return self._finish(tree, None)

    def _insert(self, tree, req, x_new, near_id) -> int:
        self.stats.nodes_added += 1
        return tree.add(x_new, near_id)

    def _direct_to_goal(self, req, q) -> bool:
        return distance(q, req.goal) <= req.goal_radius and req.env.is_free_motion(q, req.goal)

    @staticmethod
    def _attach_goal(tree, req, nid) -> int:
        if same_config(tree.nodes[nid].config, req.goal):
            return nid
        return tree.add(req.goal, nid)

    def _finish(self, tree, leaf):
        self.stats.nn_queries = tree.index.queries
        path = extract_path(tree, leaf) if leaf is not None else []
        return path, tree


class RRTStar(RRT):
    """RRT with choose-parent and rewiring; runs the full sample budget.

    Every node within ``goal_radius`` whose straight motion to the goal is
    free is a goal candidate; the best solution is the candidate with the
    lowest cost-to-come plus distance to goal. Rewiring only ever lowers
    costs, so the best cost never increases. The neighbourhood radius is
    ``min(gamma * (log n / n) ** (1/d), 2 * eps)`` with
    ``gamma = rewire_multiplier * 2 * eps * (1 + 1/d) ** (1/d)``.
    """

    name = "rrt_star"

    def _plan(self, req: PlanRequest):
        env, eps = req.env, req.eps
        dim = env.dim
        tree = MotionTree(req.start)
        self.tree = tree
        if self._direct_to_goal(req, req.start):
            return self._finish(tree, self._attach_goal(tree, req, 0))

        gamma = req.rewire_multiplier * 2.0 * eps * (1.0 + 1.0 / dim) ** (1.0 / dim)
        cap = 2.0 * eps
        candidates: list[int] = []
        to_goal: list[float] = []
        best = math.inf
        best_leaf = None

        while self.stats.samples_drawn < req.max_nodes:
            if self.stats.iterations:
                self._after_iteration(tree)
            self.stats.iterations += 1
            q_rand = self._sample(req)
            near_id = tree.index.nearest(q_rand)
            x_near = tree.nodes[near_id].config
            x_new = steer(x_near, q_rand, eps)
            if same_config(x_new, x_near) or not env.is_free_motion(x_near, x_new):
                req.sampler.report(False)
                continue

            n = len(tree)
            radius = min(gamma * (math.log(n) / n) ** (1.0 / dim), cap) if n > 1 else 0.0
            dists = tree.index.distances(x_new)
            tree.index.queries += 1
            neighbours = np.flatnonzero(dists <= radius).tolist()
            dists = dists.tolist()
            nodes = tree.nodes
            motion_ok = {near_id: True}

            # choose parent: cheapest neighbour with a free motion
            pool = set(neighbours)
            pool.add(near_id)
            ranked = sorted((nodes[c].cost + dists[c], c) for c in pool)
            parent = near_id
            for _, c in ranked:
                ok = motion_ok.get(c)
                if ok is None:
                    ok = motion_ok[c] = env.is_free_motion(nodes[c].config, x_new)
                if ok:
                    parent = c
                    break
            self.stats.nodes_added += 1
            nid = tree.add(x_new, parent, dists[parent])
            req.sampler.report(True)

            # rewire neighbours through the new node
            new_cost = nodes[nid].cost
            for c in neighbours:
                if c == parent:
                    continue
                node = nodes[c]
                via = new_cost + dists[c]
                if via < node.cost:
                    ok = motion_ok.get(c)
                    if ok is None:
                        ok = motion_ok[c] = env.is_free_motion(node.config, x_new)
                    if ok:
                        tree.set_parent(c, nid, dists[c])

            if distance(x_new, req.goal) <= req.goal_radius and env.is_free_motion(x_new, req.goal):
                candidates.append(nid)
                to_goal.append(distance(x_new, req.goal))

            if candidates:
                totals = np.array([tree.nodes[c].cost for c in candidates]) + np.array(to_goal)
                i = int(np.argmin(totals))
                if totals[i] < best:
                    best = float(totals[i])
                    best_leaf = candidates[i]
                    self.ctx.best_cost = best
                    self.cost_history.append((self.stats.iterations, best))

        if self.stats.iterations:
            self._after_iteration(tree)
        if best_leaf is None:
            return self._finish(tree, None)
        self.stats.nn_queries = tree.index.queries
        path = extract_path(tree, best_leaf)
        if not same_config(path[-1], req.goal):
            path.append(req.goal)
        return path, tree
