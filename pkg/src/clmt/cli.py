"""Command-line interface.

Subcommands: gen, build, oracle, compare, simulate, export-dot.
Exit codes: 0 success, 2 input or config error, 3 domain error
(disconnected or ungenerable instance), 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import builders, generate, oracle, serialize, sim
from .errors import (
    ClmtError,
    ConfigError,
    DisconnectedError,
    EnumerationLimitError,
    GenerationError,
    InvalidNodeError,
    TopologyFormatError,
)
from .graph import SensorGraph

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DOMAIN = 3
EXIT_INTERNAL = 4


def _load_topology(path: str) -> SensorGraph:
    return serialize.parse_topology(Path(path).read_text())


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        print(text, end="")


def _parse_node_range(spec: str) -> tuple[int, int]:
    try:
        if "-" in spec:
            lo_s, hi_s = spec.split("-", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(spec)
    except ValueError:
        raise ConfigError(f"--nodes expects N or LO-HI, got {spec!r}") from None
    return lo, hi


def _experiment_config(args) -> generate.ExperimentConfig:
    lo, hi = _parse_node_range(args.nodes)
    strategies = tuple(s.strip() for s in args.strategies.split(",") if s.strip())
    return generate.ExperimentConfig(
        count=args.count,
        nodes_min=lo,
        nodes_max=hi,
        radius=args.radius,
        energy_min=args.energy_min,
        energy_max=args.energy_max,
        seed=args.seed,
        strategies=strategies,
    )


def _run_builder(graph: SensorGraph, algorithm: str, root: int | None) -> builders.BuildOutcome:
    if algorithm == "clmt":
        return builders.build_clmt(graph, root=root)
    if algorithm == "espan":
        if root is not None:
            raise ConfigError("espan selects its own root; --root is not accepted")
        return builders.build_espan(graph)
    if algorithm == "spanning":
        return builders.build_spanning(graph, min(graph.node_ids()) if root is None else root)
    raise ConfigError(f"unknown algorithm {algorithm!r}")


def cmd_gen(args) -> int:
    config = _experiment_config(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    total_redraws = 0
    for index, graph, redraws in generate.instance_stream(config):
        (out_dir / f"topology_{index:03d}.json").write_text(serialize.write_topology(graph))
        total_redraws += redraws
    print(f"wrote {config.count} topologies to {out_dir} redraws={total_redraws}")
    return EXIT_OK


def cmd_build(args) -> int:
    graph = _load_topology(args.topology)
    outcome = _run_builder(graph, args.algorithm, args.root)
    line = (f"algorithm={outcome.algorithm} root={outcome.tree.root} "
            f"tree_energy={outcome.tree_energy}")
    if outcome.bottleneck is not None:
        line += f" bottleneck={outcome.bottleneck}"
    print(line)
    if args.out:
        Path(args.out).write_text(serialize.write_outcome(outcome))
    return EXIT_OK


def cmd_oracle(args) -> int:
    graph = _load_topology(args.topology)
    result = oracle.optimal_tree_energy(graph, tree_limit=args.tree_limit, node_cap=args.node_cap)
    print(f"optimum={result.optimum} root={result.witness.root} "
          f"trees_examined={result.trees_examined}")
    if args.out:
        doc = {
            "optimum": result.optimum,
            "root": result.witness.root,
            "parent": {str(c): p for c, p in sorted(result.witness.parent.items())},
            "trees_examined": result.trees_examined,
        }
        Path(args.out).write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def cmd_compare(args) -> int:
    config = _experiment_config(args)
    base = dict(tx_cost=args.tx_cost, rx_cost=args.rx_cost, agg_cost=args.agg_cost,
                rebuild_cost=args.rebuild_cost, max_rounds=args.max_rounds, seed=args.seed)
    header = ["instance", "nodes"]
    header += [f"tree_energy_{s}" for s in config.strategies]
    header += ["oracle_optimum"]
    header += [f"lifetime_{s}" for s in config.strategies]

    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    total_redraws = 0
    for index, graph, redraws in generate.instance_stream(config):
        total_redraws += redraws
        row: list = [index, len(graph)]
        for name in config.strategies:
            row.append(builders.resolve_builder(name)(graph).tree_energy)
        if len(graph) <= args.oracle_cap:
            row.append(oracle.optimal_tree_energy(graph, node_cap=args.oracle_cap).optimum)
        else:
            row.append("")
        for name in config.strategies:
            report = sim.run(graph, sim.SimConfig(strategy=name, **base))
            row.append(report.functional_lifetime_rounds)
        writer.writerow(row)
    _write_or_print(buf.getvalue(), args.out)
    print(f"compared {config.count} instances redraws={total_redraws}", file=sys.stderr)
    return EXIT_OK


def _load_sim_config(path: str) -> sim.SimConfig:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid simulation config JSON: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("simulation config must be an object")
    allowed = {f for f in sim.SimConfig.__dataclass_fields__}
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise ConfigError(f"unknown simulation config keys {unknown}")
    return sim.SimConfig(**doc)


def cmd_simulate(args) -> int:
    graph = _load_topology(args.topology)
    config = _load_sim_config(args.config)
    report = sim.run(graph, config)
    print(f"functional_lifetime={report.functional_lifetime_rounds} "
          f"network_lifetime={report.network_lifetime_rounds} "
          f"packets={report.packets_delivered} "
          f"reconstructions={report.reconstructions}")
    if args.out:
        Path(args.out).write_text(serialize.write_outcome(report))
    if args.timeline_csv:
        Path(args.timeline_csv).write_text(serialize.timeline_csv(report))
    return EXIT_OK


def cmd_export_dot(args) -> int:
    graph = _load_topology(args.topology)
    tree = None
    if args.algorithm:
        tree = _run_builder(graph, args.algorithm, args.root).tree
    _write_or_print(serialize.export_dot(graph, tree), args.out)
    return EXIT_OK


def _add_experiment_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--count", type=int, default=10, help="number of instances")
    parser.add_argument("--nodes", default="4-7", help="node count N or range LO-HI")
    parser.add_argument("--radius", type=float, default=0.6, help="unit-disk radio radius")
    parser.add_argument("--energy-min", type=float, default=1.0, help="minimum node energy")
    parser.add_argument("--energy-max", type=float, default=10.0, help="maximum node energy")
    parser.add_argument("--seed", type=int, default=0, help="stream seed")
    parser.add_argument("--strategies", default=",".join(builders.ALGORITHMS),
                        help="comma-separated strategy labels")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clmt",
        description="Build, evaluate, and simulate lifetime-maximizing aggregation trees.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate random geometric topologies")
    _add_experiment_flags(p)
    p.add_argument("--out-dir", required=True, help="directory for topology files")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("build", help="build an aggregation tree from a topology file")
    p.add_argument("--topology", required=True, help="topology JSON path")
    p.add_argument("--algorithm", required=True, choices=builders.ALGORITHMS)
    p.add_argument("--root", type=int, default=None, help="root override where permitted")
    p.add_argument("--out", default=None, help="outcome JSON path")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("oracle", help="brute-force optimal tree energy of a small topology")
    p.add_argument("--topology", required=True)
    p.add_argument("--node-cap", type=int, default=oracle.DEFAULT_NODE_CAP)
    p.add_argument("--tree-limit", type=int, default=oracle.DEFAULT_TREE_LIMIT)
    p.add_argument("--out", default=None, help="result JSON path")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("compare", help="batch-compare strategies on random instances")
    _add_experiment_flags(p)
    p.add_argument("--oracle-cap", type=int, default=oracle.DEFAULT_NODE_CAP,
                   help="omit the oracle column above this node count")
    p.add_argument("--tx-cost", type=float, default=1.0)
    p.add_argument("--rx-cost", type=float, default=0.5)
    p.add_argument("--agg-cost", type=float, default=0.0)
    p.add_argument("--rebuild-cost", type=float, default=0.0)
    p.add_argument("--max-rounds", type=int, default=1000)
    p.add_argument("--out", default=None, help="CSV path (stdout when omitted)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("simulate", help="run the lifetime simulator on a topology")
    p.add_argument("--topology", required=True)
    p.add_argument("--config", required=True, help="simulation config JSON path")
    p.add_argument("--out", default=None, help="report JSON path")
    p.add_argument("--timeline-csv", default=None, help="per-round energy CSV path")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("export-dot", help="render a topology (and optional tree) as DOT")
    p.add_argument("--topology", required=True)
    p.add_argument("--algorithm", default=None, choices=builders.ALGORITHMS,
                   help="overlay the tree built by this algorithm")
    p.add_argument("--root", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TopologyFormatError, ConfigError, InvalidNodeError,
            EnumerationLimitError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DisconnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ClmtError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def run() -> None:
    raise SystemExit(main())
