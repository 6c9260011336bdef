"""Rooted aggregation trees and their energy measures.

A tree's energy is the minimum residual energy over its non-leaf nodes,
which equals the minimum over all leaf-to-root branches of the branch
energy (the branch's minimum with the leaf itself excluded). Both
routes are implemented so they can cross-check each other.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ContractError, DisconnectedError
from .graph import SensorGraph


@dataclass(frozen=True)
class AggregationTree:
    """Spanning tree as child-to-parent pointers; the root has no entry."""

    root: int
    parent: dict[int, int]

    def nodes(self) -> set[int]:
        return set(self.parent) | {self.root}

    def non_leaf_nodes(self) -> set[int]:
        """Nodes that appear as someone's parent (root included iff it has children)."""
        return set(self.parent.values())

    def leaves(self) -> set[int]:
        return self.nodes() - self.non_leaf_nodes()

    def children_map(self) -> dict[int, list[int]]:
        kids: dict[int, list[int]] = {v: [] for v in self.nodes()}
        for child in sorted(self.parent):
            kids.setdefault(self.parent[child], []).append(child)
        return kids

    def path_to_root(self, node: int) -> list[int]:
        """Node sequence from ``node`` up to the root, inclusive."""
        if node not in self.nodes():
            raise ContractError(f"node {node} is not in the tree")
        path = [node]
        seen = {node}
        while path[-1] != self.root:
            nxt = self.parent.get(path[-1])
            if nxt is None or nxt in seen:
                raise ContractError(f"parent chain from {node} does not reach the root")
            path.append(nxt)
            seen.add(nxt)
        return path


def validation_errors(tree: AggregationTree, graph: SensorGraph) -> list[str]:
    """All invariant violations of ``tree`` against ``graph``; empty when valid."""
    problems = []
    if tree.root not in graph:
        problems.append(f"root {tree.root} is not a graph node")
    if tree.root in tree.parent:
        problems.append(f"root {tree.root} has a parent")
    tree_nodes = set(tree.parent) | {tree.root}
    graph_nodes = set(graph.node_ids())
    for extra in sorted(tree_nodes - graph_nodes):
        problems.append(f"tree node {extra} is not in the graph")
    for missing in sorted(graph_nodes - tree_nodes):
        problems.append(f"graph node {missing} is not spanned")
    for child in sorted(tree.parent):
        parent = tree.parent[child]
        if parent not in tree_nodes:
            problems.append(f"parent {parent} of {child} is not a tree node")
        elif not graph.has_edge(child, parent):
            problems.append(f"parent link {child}-{parent} is not a graph edge")
    # Every parent chain must terminate at the root without revisiting a node.
    ok: set[int] = {tree.root}
    for start in sorted(tree.parent):
        chain = []
        seen = set()
        v = start
        while v not in ok:
            if v in seen or v not in tree_nodes or (v != tree.root and v not in tree.parent):
                problems.append(f"parent chain from {start} cycles or dead-ends at {v}")
                chain = []
                break
            seen.add(v)
            chain.append(v)
            v = tree.parent[v]
        ok.update(chain)
    return problems


def validate(tree: AggregationTree, graph: SensorGraph) -> bool:
    """True iff every tree invariant holds against the graph."""
    return not validation_errors(tree, graph)


def branch_energy(tree: AggregationTree, graph: SensorGraph, leaf: int) -> float:
    """Minimum energy along the leaf-to-root branch, the leaf itself excluded.

    For the degenerate single-node tree the root is its own branch and its
    own energy is returned.
    """
    if leaf in tree.non_leaf_nodes():
        raise ContractError(f"node {leaf} is not a leaf")
    path = tree.path_to_root(leaf)
    if len(path) == 1:
        return graph.energy(leaf)
    return min(graph.energy(v) for v in path[1:])


def tree_energy(tree: AggregationTree, graph: SensorGraph) -> float:
    """Minimum residual energy over the tree's non-leaf nodes.

    A single-node tree carries its node's own energy. Raises when the
    tree does not validate against the graph.
    """
    problems = validation_errors(tree, graph)
    if problems:
        raise ContractError("invalid tree: " + "; ".join(problems))
    internal = tree.non_leaf_nodes()
    if not internal:
        return graph.energy(tree.root)
    return min(graph.energy(v) for v in internal)


def hop_distances(graph: SensorGraph, root: int) -> dict[int, int]:
    """BFS hop count from ``root`` for every reachable node."""
    dist = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in sorted(graph.neighbors(v)):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def shortest_path_tree(graph: SensorGraph, root: int) -> AggregationTree:
    """Hop-minimal spanning tree rooted at ``root``.

    Links are unweighted, so every node's tree depth equals its graph hop
    distance. Among the equal-distance parent candidates the highest-energy
    one wins, lowest id on ties.
    """
    dist = hop_distances(graph, root)
    if len(dist) != len(graph):
        missing = sorted(set(graph.node_ids()) - set(dist))
        raise DisconnectedError(f"graph not connected: no path from {root} to {missing}")
    parent = {}
    for v in graph.node_ids():
        if v == root:
            continue
        candidates = [u for u in graph.neighbors(v) if dist[u] == dist[v] - 1]
        parent[v] = min(candidates, key=lambda u: (-graph.energy(u), u))
    return AggregationTree(root=root, parent=parent)
