"""Bidirectional RRT-Connect."""

from __future__ import annotations

from ..cspace import steer
from .base import Planner, PlanRequest, same_config
from .tree import MotionTree, extract_path


class RRTConnect(Planner):
    """Two trees, rooted at start and goal, that take turns extending.

    Each iteration extends the active tree one step toward a sample, then
    greedily grows the other tree toward the new node until it is blocked
    or the trees meet. ``nodes_added`` counts only nodes created from
    samples (the extend step), so it never exceeds ``samples_drawn``;
    nodes laid down while connecting show up in the tree sizes instead.
    """

    name = "rrt_connect"

    def _plan(self, req: PlanRequest):
        env, eps = req.env, req.eps
        start_tree = MotionTree(req.start)
        goal_tree = MotionTree(req.goal)
        self.trees = (start_tree, goal_tree)
        active, other = start_tree, goal_tree

        while self.stats.samples_drawn < req.max_nodes:
            self.stats.iterations += 1
            q_rand = self._sample(req)
            near_id = active.index.nearest(q_rand)
            x_near = active.nodes[near_id].config
            x_new = steer(x_near, q_rand, eps)
            if same_config(x_new, x_near) or not env.is_free_motion(x_near, x_new):
                req.sampler.report(False)
            else:
                new_id = active.add(x_new, near_id)
                self.stats.nodes_added += 1
                req.sampler.report(True)
                joined = self._connect(other, x_new, req)
                if joined is not None:
                    path = extract_path(active, new_id) + extract_path(other, joined)[::-1][1:]
                    if active is goal_tree:
                        path.reverse()
                    self._count_queries()
                    return path, self.trees
            active, other = other, active

        self._count_queries()
        return [], self.trees

    def _connect(self, tree: MotionTree, target, req: PlanRequest):
        """Grow ``tree`` toward ``target``; the joining node id, or None if blocked."""
        cur = tree.index.nearest(target)
        while True:
            x_cur = tree.nodes[cur].config
            if same_config(x_cur, target):
                return cur
            x_step = steer(x_cur, target, req.eps)
            if not req.env.is_free_motion(x_cur, x_step):
                return None
            cur = tree.add(x_step, cur)

    def _count_queries(self) -> None:
        self.stats.nn_queries = sum(t.index.queries for t in self.trees)
