"""Brute-force ground truth for small instances.

Enumerates every spanning tree, so it is meant to be obviously correct
rather than fast; the node cap keeps runtimes sane. Builders are checked
against :func:`optimal_tree_energy`, and :func:`cut_vertices` gives an
independent handle on which nodes every tree must keep internal.
"""

from __future__ import annotations

from collections import Counter, deque
from collections.abc import Iterator
from dataclasses import dataclass

from .errors import DisconnectedError, EnumerationLimitError
from .graph import Edge, SensorGraph
from .tree import AggregationTree

DEFAULT_NODE_CAP = 9
DEFAULT_TREE_LIMIT = 1_000_000


@dataclass(frozen=True)
class OracleResult:
    optimum: float
    witness: AggregationTree
    trees_examined: int


def enumerate_spanning_trees(graph: SensorGraph,
                             tree_limit: int = DEFAULT_TREE_LIMIT,
                             node_cap: int = DEFAULT_NODE_CAP) -> Iterator[frozenset[Edge]]:
    """Yield each spanning tree exactly once, as a frozenset of edges.

    Recursive include/exclude over a fixed edge order: an edge is taken
    only when it joins two components, and skipped only when the edges
    still on the table can span without it, so no branch is wasted and no
    tree appears twice. Raises when the graph is over ``node_cap`` nodes
    or the tree count would exceed ``tree_limit``.
    """
    n = len(graph)
    if n > node_cap:
        raise EnumerationLimitError(f"graph has {n} nodes, enumeration is capped at {node_cap}")
    if not graph.is_connected():
        raise DisconnectedError("graph not connected")
    edges = sorted(graph.edges())
    node_list = graph.node_ids()
    target = n - 1
    count = 0

    def spans(available: list[Edge]) -> bool:
        adj: dict[int, list[int]] = {v: [] for v in node_list}
        for u, v in available:
            adj[u].append(v)
            adj[v].append(u)
        seen = {node_list[0]}
        stack = [node_list[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == n

    def walk(idx: int, chosen: list[Edge], comp: dict[int, int]) -> Iterator[frozenset[Edge]]:
        nonlocal count
        if len(chosen) == target:
            count += 1
            if count > tree_limit:
                raise EnumerationLimitError(
                    f"more than {tree_limit} spanning trees; raise tree_limit to enumerate")
            yield frozenset(chosen)
            return
        if idx == len(edges):
            return
        u, v = edges[idx]
        if comp[u] != comp[v]:
            merged = {x: (comp[u] if c == comp[v] else c) for x, c in comp.items()}
            chosen.append(edges[idx])
            yield from walk(idx + 1, chosen, merged)
            chosen.pop()
        if spans(chosen + edges[idx + 1:]):
            yield from walk(idx + 1, chosen, comp)

    yield from walk(0, [], {v: v for v in node_list})


def optimal_tree_energy(graph: SensorGraph,
                        tree_limit: int = DEFAULT_TREE_LIMIT,
                        node_cap: int = DEFAULT_NODE_CAP) -> OracleResult:
    """Maximum tree energy over every spanning tree and every root choice.

    Rooting at r makes the internal set {degree >= 2} plus r itself, so for
    each undirected tree the best root is any already-internal node; the
    witness roots at the highest-energy one (lowest id on ties).
    """
    best: tuple[float, int, frozenset[Edge]] | None = None
    examined = 0
    for tree_edges in enumerate_spanning_trees(graph, tree_limit, node_cap):
        examined += 1
        energy, root = _best_rooting(graph, tree_edges)
        if best is None or energy > best[0]:
            best = (energy, root, tree_edges)
    assert best is not None  # connected graphs have at least one spanning tree
    optimum, root, tree_edges = best
    return OracleResult(optimum, _root_tree(graph, tree_edges, root), examined)


def _best_rooting(graph: SensorGraph, tree_edges: frozenset[Edge]) -> tuple[float, int]:
    nodes = graph.node_ids()
    if len(nodes) == 1:
        return graph.energy(nodes[0]), nodes[0]
    degree = Counter()
    for u, v in tree_edges:
        degree[u] += 1
        degree[v] += 1
    internal = [v for v in nodes if degree[v] >= 2]
    if not internal:
        # Two-node tree: the root is the only internal node, so pick the best.
        root = min(nodes, key=lambda v: (-graph.energy(v), v))
        return graph.energy(root), root
    root = min(internal, key=lambda v: (-graph.energy(v), v))
    return min(graph.energy(v) for v in internal), root


def _root_tree(graph: SensorGraph, tree_edges: frozenset[Edge], root: int) -> AggregationTree:
    adj: dict[int, list[int]] = {v: [] for v in graph.node_ids()}
    for u, v in tree_edges:
        adj[u].append(v)
        adj[v].append(u)
    parent = {}
    queue = deque([root])
    seen = {root}
    while queue:
        v = queue.popleft()
        for u in sorted(adj[v]):
            if u not in seen:
                seen.add(u)
                parent[u] = v
                queue.append(u)
    return AggregationTree(root=root, parent=parent)


def cut_vertices(graph: SensorGraph) -> set[int]:
    """Nodes whose removal disconnects the graph.

    Definition-level check by removal and reachability; every cut vertex
    is internal in every spanning tree, which bounds the best achievable
    tree energy by its own.
    """
    if not graph.is_connected():
        raise DisconnectedError("graph not connected")
    nodes = graph.node_ids()
    if len(nodes) <= 2:
        return set()
    cuts = set()
    for v in nodes:
        rest = graph.induced_subgraph(set(nodes) - {v})
        if not rest.is_connected():
            cuts.add(v)
    return cuts
