"""Topology files, result documents, CSV timelines, and DOT export.

All writers emit canonical JSON (sorted keys, two-space indent, trailing
newline) so two writes of the same value are byte-identical; floats use
Python's shortest round-trip representation.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any

from .builders import ALGORITHMS, BuildOutcome, SweepEvent
from .errors import ContractError, TopologyFormatError
from .graph import SensorGraph, edge_key
from .sim import SimReport
from .tree import AggregationTree, validation_errors

SCHEMA_VERSION = 1


def _dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


# -- topologies ------------------------------------------------------------

def parse_topology(text: str) -> SensorGraph:
    """Parse a topology document into a graph.

    Every rejection carries the offending location: duplicate ids or
    edges, unknown edge endpoints, self-loops, and negative energies are
    all distinct diagnostics.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TopologyFormatError(f"invalid JSON: {exc.msg}",
                                  location=f"line {exc.lineno} column {exc.colno}") from exc
    if not isinstance(doc, dict):
        raise TopologyFormatError("topology document must be an object", location="$")
    version = doc.get("version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise TopologyFormatError(f"unsupported schema version {version!r}", location="version")
    nodes = doc.get("nodes")
    if not isinstance(nodes, list) or not nodes:
        raise TopologyFormatError("'nodes' must be a non-empty list", location="nodes")
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise TopologyFormatError("'edges' must be a list", location="edges")

    graph = SensorGraph()
    for i, entry in enumerate(nodes):
        loc = f"nodes[{i}]"
        if not isinstance(entry, dict):
            raise TopologyFormatError("node entry must be an object", location=loc)
        node_id = entry.get("id")
        energy = entry.get("energy")
        if isinstance(node_id, bool) or not isinstance(node_id, int) or node_id < 0:
            raise TopologyFormatError(f"id must be a non-negative integer, got {node_id!r}",
                                      location=loc)
        if node_id in graph:
            raise TopologyFormatError(f"duplicate node id {node_id}", location=loc)
        if isinstance(energy, bool) or not isinstance(energy, (int, float)):
            raise TopologyFormatError(f"energy must be a number, got {energy!r}", location=loc)
        if energy < 0:
            raise TopologyFormatError(f"negative energy {energy!r}", location=loc)
        if not math.isfinite(energy):
            raise TopologyFormatError(f"non-finite energy {energy!r}", location=loc)
        graph.add_node(node_id, float(energy))

    seen = set()
    for i, entry in enumerate(edges):
        loc = f"edges[{i}]"
        if (not isinstance(entry, list) or len(entry) != 2
                or any(isinstance(x, bool) or not isinstance(x, int) for x in entry)):
            raise TopologyFormatError(f"edge must be a pair of node ids, got {entry!r}",
                                      location=loc)
        u, v = entry
        if u == v:
            raise TopologyFormatError(f"self-loop at node {u}", location=loc)
        for endpoint in (u, v):
            if endpoint not in graph:
                raise TopologyFormatError(f"unknown endpoint {endpoint}", location=loc)
        key = edge_key(u, v)
        if key in seen:
            raise TopologyFormatError(f"duplicate edge {u}-{v}", location=loc)
        seen.add(key)
        graph.add_edge(u, v)
    return graph


def write_topology(graph: SensorGraph) -> str:
    doc = {
        "version": SCHEMA_VERSION,
        "nodes": [{"id": v, "energy": graph.energy(v)} for v in graph.node_ids()],
        "edges": [list(e) for e in sorted(graph.edges())],
    }
    return _dumps(doc)


# -- outcomes and reports ----------------------------------------------------

def write_outcome(outcome: BuildOutcome | SimReport) -> str:
    """Serialize a build outcome or a simulation report canonically."""
    if isinstance(outcome, BuildOutcome):
        return _dumps(_build_doc(outcome))
    if isinstance(outcome, SimReport):
        return _dumps(_report_doc(outcome))
    raise ContractError(f"cannot serialize {type(outcome).__name__}")


def _build_doc(outcome: BuildOutcome) -> dict:
    return {
        "algorithm": outcome.algorithm,
        "root": outcome.tree.root,
        "parent": {str(child): parent for child, parent in sorted(outcome.tree.parent.items())},
        "tree_energy": outcome.tree_energy,
        "bottleneck": outcome.bottleneck,
        "trace": [
            {
                "node": ev.node,
                "kept": ev.kept,
                "removed": [list(e) for e in ev.removed],
                "connected": ev.connected,
            }
            for ev in outcome.trace
        ],
    }


def _report_doc(report: SimReport) -> dict:
    return {
        "functional_lifetime_rounds": report.functional_lifetime_rounds,
        "network_lifetime_rounds": report.network_lifetime_rounds,
        "reconstructions": report.reconstructions,
        "packets_delivered": report.packets_delivered,
        "energy_charged": report.energy_charged,
        "final_energies": {str(v): e for v, e in sorted(report.final_energies.items())},
        "energy_timeline": [
            {"round": i, "energies": {str(v): e for v, e in sorted(entry.items())}}
            for i, entry in enumerate(report.energy_timeline, start=1)
        ],
    }


def read_outcome(text: str) -> BuildOutcome | SimReport:
    """Parse a document produced by :func:`write_outcome`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TopologyFormatError(f"invalid JSON: {exc.msg}",
                                  location=f"line {exc.lineno} column {exc.colno}") from exc
    if not isinstance(doc, dict):
        raise TopologyFormatError("result document must be an object", location="$")
    if "algorithm" in doc:
        return _read_build(doc)
    if "functional_lifetime_rounds" in doc:
        return _read_report(doc)
    raise TopologyFormatError("unrecognized result document", location="$")


def _read_build(doc: dict) -> BuildOutcome:
    try:
        algorithm = doc["algorithm"]
        if algorithm not in ALGORITHMS:
            raise TopologyFormatError(f"unknown algorithm {algorithm!r}", location="algorithm")
        tree = AggregationTree(
            root=int(doc["root"]),
            parent={int(child): int(parent) for child, parent in doc["parent"].items()},
        )
        bottleneck = doc["bottleneck"]
        trace = tuple(
            SweepEvent(
                node=int(ev["node"]),
                kept=None if ev["kept"] is None else int(ev["kept"]),
                removed=tuple(edge_key(int(u), int(v)) for u, v in ev["removed"]),
                connected=bool(ev["connected"]),
            )
            for ev in doc["trace"]
        )
        return BuildOutcome(
            algorithm=algorithm,
            tree=tree,
            tree_energy=float(doc["tree_energy"]),
            bottleneck=None if bottleneck is None else int(bottleneck),
            trace=trace,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise TopologyFormatError(f"malformed build outcome: {exc!r}", location="$") from exc


def _read_report(doc: dict) -> SimReport:
    try:
        return SimReport(
            functional_lifetime_rounds=int(doc["functional_lifetime_rounds"]),
            network_lifetime_rounds=int(doc["network_lifetime_rounds"]),
            reconstructions=int(doc["reconstructions"]),
            packets_delivered=int(doc["packets_delivered"]),
            energy_timeline=tuple(
                {int(v): float(e) for v, e in entry["energies"].items()}
                for entry in doc["energy_timeline"]
            ),
            final_energies={int(v): float(e) for v, e in doc["final_energies"].items()},
            energy_charged=float(doc["energy_charged"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise TopologyFormatError(f"malformed simulation report: {exc!r}", location="$") from exc


def timeline_csv(report: SimReport) -> str:
    """Energy timeline as CSV with columns round, node_id, energy."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["round", "node_id", "energy"])
    for i, entry in enumerate(report.energy_timeline, start=1):
        for v in sorted(entry):
            writer.writerow([i, v, repr(entry[v])])
    return buf.getvalue()


# -- DOT export --------------------------------------------------------------

def export_dot(graph: SensorGraph, tree: AggregationTree | None = None) -> str:
    """Render the graph in DOT, optionally overlaying an aggregation tree.

    Tree edges are solid and directed child-to-parent, remaining graph
    edges dashed, and the root is double-circled. Node labels carry the
    residual energy in joules.
    """
    if tree is not None:
        problems = validation_errors(tree, graph)
        if problems:
            raise ContractError("invalid tree: " + "; ".join(problems))
    lines = ["digraph sensors {"]
    for v in graph.node_ids():
        attrs = [f'label="{v} ({graph.energy(v)} J)"']
        if tree is not None and v == tree.root:
            attrs.append("shape=doublecircle")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    tree_edges: set = set()
    if tree is not None:
        for child in sorted(tree.parent):
            lines.append(f"  {child} -> {tree.parent[child]};")
            tree_edges.add(edge_key(child, tree.parent[child]))
    for u, v in sorted(graph.edges()):
        if (u, v) not in tree_edges:
            lines.append(f"  {u} -> {v} [dir=none, style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
