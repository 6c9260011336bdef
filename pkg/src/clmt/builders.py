"""Tree construction strategies.

Three builders share one outcome type:

* ``clmt``     - ascending-energy bottleneck sweep, then hop-minimal
                 rooting on the pruned graph. Maximizes tree energy.
* ``espan``    - root at the highest-energy node; every other node parents
                 to its highest-energy shortest-path predecessor.
* ``spanning`` - plain hop-minimal tree around a chosen root, blind to
                 energy (lowest-id parent on ties).

All builders leave the caller's graph untouched and are deterministic,
including the recorded sweep trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import ClmtError, ConfigError, ContractError, DisconnectedError
from .graph import Edge, SensorGraph
from .tree import AggregationTree, hop_distances, shortest_path_tree, tree_energy

ALGORITHMS = ("clmt", "espan", "spanning")


@dataclass(frozen=True)
class SweepEvent:
    """One step of the ascending-energy sweep.

    ``kept`` is the highest-energy neighbor whose link survives, or None
    when the node was skipped because no neighbor is strictly higher.
    ``removed`` lists the links pruned at this step in canonical order,
    and ``connected`` records the connectivity test after the removal.
    """

    node: int
    kept: int | None
    removed: tuple[Edge, ...]
    connected: bool


@dataclass(frozen=True)
class BuildOutcome:
    """A built tree plus its energy, bottleneck (if any), and sweep trace."""

    algorithm: str
    tree: AggregationTree
    tree_energy: float
    bottleneck: int | None
    trace: tuple[SweepEvent, ...]


def find_bottleneck(graph: SensorGraph) -> tuple[int | None, SensorGraph, tuple[SweepEvent, ...]]:
    """Sweep nodes in ascending energy order looking for the bottleneck.

    Each tested node keeps only the link to its strictly-higher-energy
    best neighbor; if that disconnects the working graph, the node is the
    bottleneck: its just-removed links are restored and the sweep stops.
    Removals from earlier, non-disconnecting steps persist. Nodes with no
    strictly higher neighbor keep all their links (they must stay parents
    for their neighbors).

    Returns ``(bottleneck_or_None, pruned_graph, trace)``. The pruned
    graph is the working copy at termination and is safe to mutate.
    """
    if not graph.is_connected():
        raise DisconnectedError("graph not connected")
    work = graph.copy()
    trace: list[SweepEvent] = []
    for node in work.nodes_ascending_energy():
        kept = work.highest_energy_neighbor(node)
        if kept is None:
            trace.append(SweepEvent(node, None, (), True))
            continue
        removed = tuple(sorted(work.remove_links_except(node, kept)))
        if work.is_connected():
            trace.append(SweepEvent(node, kept, removed, True))
            continue
        work.restore_links(removed)
        trace.append(SweepEvent(node, kept, removed, False))
        return node, work, tuple(trace)
    return None, work, tuple(trace)


def build_clmt(graph: SensorGraph, root: int | None = None) -> BuildOutcome:
    """Build the lifetime-maximizing tree.

    With a bottleneck b the tree roots at b (or at any requested node from
    the remaining sweep set) on the pruned-and-restored graph, and the tree
    energy is e(b) by construction. Without one, the root is the
    highest-energy node of the final pruned graph and the energy is
    computed from the tree itself; requesting any other root is an error
    because the construction pins it.
    """
    bottleneck, pruned, trace = find_bottleneck(graph)
    if bottleneck is not None:
        chosen = bottleneck if root is None else root
        order = pruned.nodes_ascending_energy()
        remaining = order[order.index(bottleneck):]
        if chosen not in remaining:
            raise ContractError(
                f"root {chosen} is not in the remaining set {remaining} of bottleneck {bottleneck}")
        tree = shortest_path_tree(pruned, chosen)
        energy = graph.energy(bottleneck)
        achieved = tree_energy(tree, graph)
        if achieved != energy:
            raise ClmtError(
                f"invariant violation: built tree energy {achieved} != bottleneck energy {energy}")
    else:
        top = pruned.max_energy_node()
        if root is not None and root != top:
            raise ContractError(
                f"no bottleneck found; the root is pinned to the highest-energy node {top}")
        tree = shortest_path_tree(pruned, top)
        energy = tree_energy(tree, graph)
    return BuildOutcome("clmt", tree, energy, bottleneck, trace)


def build_espan(graph: SensorGraph) -> BuildOutcome:
    """Energy-aware baseline: highest-energy root, highest-energy
    shortest-path predecessor as parent (lowest id on ties)."""
    if not graph.is_connected():
        raise DisconnectedError("graph not connected")
    tree = shortest_path_tree(graph, graph.max_energy_node())
    return BuildOutcome("espan", tree, tree_energy(tree, graph), None, ())


def build_spanning(graph: SensorGraph, root: int) -> BuildOutcome:
    """Conventional baseline: hop-minimal tree that ignores residual energy.

    Equal-distance parent candidates are broken by lowest id alone, the
    energy-agnostic choice.
    """
    dist = hop_distances(graph, root)
    if len(dist) != len(graph):
        raise DisconnectedError("graph not connected")
    parent = {}
    for v in graph.node_ids():
        if v == root:
            continue
        parent[v] = min(u for u in graph.neighbors(v) if dist[u] == dist[v] - 1)
    tree = AggregationTree(root=root, parent=parent)
    return BuildOutcome("spanning", tree, tree_energy(tree, graph), None, ())


def resolve_builder(name: str) -> Callable[[SensorGraph], BuildOutcome]:
    """Builder callable for an algorithm label.

    ``spanning`` gets the lowest node id as its root, modeling a protocol
    that picks its sink with no regard to energy.
    """
    if name == "clmt":
        return build_clmt
    if name == "espan":
        return build_espan
    if name == "spanning":
        return lambda g: build_spanning(g, min(g.node_ids()))
    raise ConfigError(f"unknown algorithm {name!r}; expected one of {ALGORITHMS}")
