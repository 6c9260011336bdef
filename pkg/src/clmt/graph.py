"""Undirected sensor graph annotated with residual energies.

Node ids are non-negative integers; energies are finite non-negative
floats. Every energy comparison that can tie breaks toward the lower
node id, so all energy-ordered decisions are deterministic.

Edges are stored as canonical ``(min_id, max_id)`` tuples; ``edge_key``
produces that form.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping

from .errors import ContractError, InvalidNodeError

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical form of an undirected edge."""
    return (u, v) if u <= v else (v, u)


class SensorGraph:
    """Mutable undirected graph of source nodes keyed by id.

    Mutation is limited to what the tree builders need (link removal and
    restoration); builders always work on a private copy, so graphs held
    by callers are never touched. Instances are not thread-safe while
    being mutated; clone with :meth:`copy` to share across workers.
    """

    def __init__(self, nodes: Mapping[int, float] | None = None,
                 edges: Iterable[tuple[int, int]] = ()):
        self._energy: dict[int, float] = {}
        self._adj: dict[int, set[int]] = {}
        for node, energy in (nodes or {}).items():
            self.add_node(node, energy)
        for u, v in edges:
            self.add_edge(u, v)

    # -- construction ---------------------------------------------------

    def add_node(self, node: int, energy: float) -> None:
        if not isinstance(node, int) or isinstance(node, bool) or node < 0:
            raise ContractError(f"node id must be a non-negative integer, got {node!r}")
        if node in self._energy:
            raise ContractError(f"node {node} already present")
        energy = float(energy)
        if not math.isfinite(energy) or energy < 0.0:
            raise ContractError(f"energy of node {node} must be finite and >= 0, got {energy!r}")
        self._energy[node] = energy
        self._adj[node] = set()

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ContractError(f"self-loop {u}-{v} not allowed")
        self._require(u)
        self._require(v)
        self._adj[u].add(v)
        self._adj[v].add(u)

    def copy(self) -> SensorGraph:
        clone = SensorGraph()
        clone._energy = dict(self._energy)
        clone._adj = {v: set(nbrs) for v, nbrs in self._adj.items()}
        return clone

    def induced_subgraph(self, keep: Iterable[int]) -> SensorGraph:
        """Subgraph on ``keep`` with the edges both of whose endpoints survive."""
        kept = set(keep)
        for v in kept:
            self._require(v)
        sub = SensorGraph({v: self._energy[v] for v in kept})
        for u, v in self.edges():
            if u in kept and v in kept:
                sub.add_edge(u, v)
        return sub

    # -- queries ----------------------------------------------------------

    def __len__(self) -> int:
        return len(self._energy)

    def __contains__(self, node: int) -> bool:
        return node in self._energy

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SensorGraph):
            return NotImplemented
        return self._energy == other._energy and self._adj == other._adj

    def __repr__(self) -> str:
        return f"SensorGraph({len(self)} nodes, {self.edge_count()} edges)"

    def node_ids(self) -> list[int]:
        return sorted(self._energy)

    def energy(self, node: int) -> float:
        self._require(node)
        return self._energy[node]

    def energies(self) -> dict[int, float]:
        return dict(self._energy)

    def edges(self) -> set[Edge]:
        return {(u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v}

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighbors(self, node: int) -> set[int]:
        self._require(node)
        return set(self._adj[node])

    def degree(self, node: int) -> int:
        self._require(node)
        return len(self._adj[node])

    def is_connected(self) -> bool:
        """Whether every node is reachable from every other."""
        if not self._energy:
            raise ContractError("connectivity is undefined on an empty graph")
        start = next(iter(self._energy))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in self._adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(self._energy)

    def highest_energy_neighbor(self, node: int) -> int | None:
        """Neighbor with the greatest energy strictly above the node's own.

        Ties break to the lowest id; returns None when no neighbor is
        strictly higher.
        """
        self._require(node)
        own = self._energy[node]
        best = None
        for u in self._adj[node]:
            if self._energy[u] <= own:
                continue
            if best is None or (-self._energy[u], u) < (-self._energy[best], best):
                best = u
        return best

    def max_energy_node(self) -> int:
        """Highest-energy node in the graph, lowest id on ties."""
        if not self._energy:
            raise ContractError("empty graph has no maximum-energy node")
        return min(self._energy, key=lambda v: (-self._energy[v], v))

    def nodes_ascending_energy(self) -> list[int]:
        """All node ids ordered by energy ascending, id ascending on ties."""
        return sorted(self._energy, key=lambda v: (self._energy[v], v))

    # -- mutation ---------------------------------------------------------

    def remove_links_except(self, node: int, keep: int) -> set[Edge]:
        """Drop every link of ``node`` except the one to ``keep``.

        Returns exactly the removed edges so the caller can undo the
        operation with :meth:`restore_links`.
        """
        self._require(node)
        if keep not in self._adj[node]:
            raise ContractError(f"node {keep} is not a neighbor of {node}")
        removed = {edge_key(node, u) for u in self._adj[node] if u != keep}
        for u, v in removed:
            self._adj[u].discard(v)
            self._adj[v].discard(u)
        return removed

    def restore_links(self, removed: Iterable[Edge]) -> None:
        """Re-add previously removed edges; a no-op for edges already present."""
        for u, v in removed:
            if u == v:
                raise ContractError(f"self-loop {u}-{v} not allowed")
            self._require(u)
            self._require(v)
            self._adj[u].add(v)
            self._adj[v].add(u)

    def _require(self, node: int) -> None:
        if node not in self._energy:
            raise InvalidNodeError(f"unknown node {node}")
