"""Shared test utilities: independent re-implementations used as oracles
plus random structure generators. Nothing here may call the code path it
is used to check."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from clmt.graph import SensorGraph, edge_key
from clmt.tree import AggregationTree


def reachable_from(nodes: set[int], edges: set[tuple[int, int]], start: int) -> set[int]:
    """Plain DFS reachability, independent of SensorGraph internals."""
    adj: dict[int, set[int]] = {v: set() for v in nodes}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def edgeset_connected(nodes: set[int], edges: set[tuple[int, int]]) -> bool:
    return reachable_from(nodes, edges, next(iter(nodes))) == nodes


def bfs_levels(graph: SensorGraph, root: int) -> dict[int, int]:
    """Independent level-by-level BFS used to cross-check hop distances."""
    level = 0
    dist: dict[int, int] = {}
    frontier = {root}
    while frontier:
        for v in frontier:
            dist[v] = level
        frontier = {u for v in frontier for u in graph.neighbors(v) if u not in dist}
        level += 1
    return dist


def random_spanning_tree(graph: SensorGraph, rng: random.Random) -> AggregationTree:
    """Random valid spanning tree grown by randomized frontier expansion."""
    nodes = graph.node_ids()
    root = rng.choice(nodes)
    parent: dict[int, int] = {}
    visited = {root}
    frontier = [root]
    while frontier:
        v = frontier.pop(rng.randrange(len(frontier)))
        neighbors = sorted(graph.neighbors(v))
        rng.shuffle(neighbors)
        for u in neighbors:
            if u not in visited:
                visited.add(u)
                parent[u] = v
                frontier.append(u)
    return AggregationTree(root=root, parent=parent)


@st.composite
def sensor_graphs(draw, min_nodes: int = 1, max_nodes: int = 8,
                  connected: bool = False, max_energy: int = 8):
    """Random graphs with small integer energies so ties are common.

    With connected=True a random attachment tree is laid down first, then
    extra edges are toggled on top.
    """
    n = draw(st.integers(min_nodes, max_nodes))
    ids = sorted(draw(st.sets(st.integers(0, 30), min_size=n, max_size=n)))
    energies = {v: float(draw(st.integers(0, max_energy))) for v in ids}
    edges: set[tuple[int, int]] = set()
    if connected:
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            edges.add(edge_key(ids[i], ids[j]))
    for i in range(n):
        for j in range(i + 1, n):
            pair = (ids[i], ids[j])
            if pair not in edges and draw(st.booleans()):
                edges.add(pair)
    return SensorGraph(energies, sorted(edges))
