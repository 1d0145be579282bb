"""Motion tree with cost-to-come bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..cspace import Configuration, as_config, distance
from ..errors import ContractViolation
from .nn import LinearIndex


@dataclass
class Node:
    id: int
    config: Configuration
    parent: int | None
    cost: float
    edge: float = 0.0  # length of the edge to the parent


class MotionTree:
    """Append-only tree rooted at node 0.

    Nodes are only ever appended, so a parent precedes its child until
    ``set_parent`` (rewiring) moves a node under a younger one. Rewiring
    only attaches a node below a parent whose new cost-to-come is strictly
    lower, so no cycle can form.
    """

    def __init__(self, root: Configuration):
        root = as_config(root)
        self.index = LinearIndex(root.shape[0])
        self.nodes: list[Node] = []
        self.children: list[list[int]] = []
        self._append(root, None, 0.0)

    def _append(self, config, parent, cost, edge=0.0) -> int:
        nid = self.index.add(config)
        self.nodes.append(Node(nid, config, parent, cost, edge))
        self.children.append([])
        if parent is not None:
            self.children[parent].append(nid)
        return nid

    def __len__(self) -> int:
        return len(self.nodes)

    def add(self, config: Configuration, parent: int, edge: float | None = None) -> int:
        """Append a child of ``parent``; ``edge`` may pass a precomputed distance."""
        if not 0 <= parent < len(self.nodes):
            raise ContractViolation(f"unknown parent id {parent}")
        config = as_config(config)
        if edge is None:
            edge = distance(self.nodes[parent].config, config)
        return self._append(config, parent, self.nodes[parent].cost + edge, edge)

    def set_parent(self, nid: int, parent: int, edge: float | None = None) -> None:
        """Re-parent ``nid`` and propagate the new cost to its subtree."""
        node = self.nodes[nid]
        if edge is None:
            edge = distance(self.nodes[parent].config, node.config)
        self.children[node.parent].remove(nid)
        node.parent = parent
        node.edge = edge
        self.children[parent].append(nid)
        node.cost = self.nodes[parent].cost + edge
        nodes = self.nodes
        stack = list(self.children[nid])
        while stack:
            cid = stack.pop()
            child = nodes[cid]
            child.cost = nodes[child.parent].cost + child.edge
            stack.extend(self.children[cid])

    def costs(self) -> np.ndarray:
        return np.array([n.cost for n in self.nodes])

    def edges(self) -> list[tuple[int, int]]:
        """``(parent, child)`` pairs in child-id order."""
        return [(n.parent, n.id) for n in self.nodes if n.parent is not None]


def nearest(tree: MotionTree, q: Configuration) -> int:
    return tree.index.nearest(q)


def near(tree: MotionTree, q: Configuration, radius: float) -> list[int]:
    return tree.index.near(q, radius)


def extract_path(tree: MotionTree, leaf: int) -> list[Configuration]:
    """Configurations from the root to ``leaf`` inclusive."""
    if not isinstance(leaf, (int, np.integer)) or not 0 <= leaf < len(tree.nodes):
        raise ContractViolation(f"unknown node id {leaf}")
    path = []
    nid = int(leaf)
    while nid is not None:
        node = tree.nodes[nid]
        path.append(node.config)
        nid = node.parent
    path.reverse()
    return path
