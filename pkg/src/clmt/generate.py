"""Random geometric instance generation for experiments.

Nodes are placed uniformly in the unit square and linked when within the
radio radius, the standard unit-disk model for sensor deployments.
Disconnected draws are rejected and redrawn; the whole instance stream
is a pure function of the seed.
"""

from __future__ import annotations

import math
import random
from collections.abc import Iterator
from dataclasses import dataclass

from .builders import ALGORITHMS
from .errors import ConfigError, GenerationError
from .graph import SensorGraph

MAX_REDRAWS = 1000


@dataclass(frozen=True)
class ExperimentConfig:
    count: int
    nodes_min: int
    nodes_max: int
    radius: float
    energy_min: float
    energy_max: float
    seed: int
    strategies: tuple[str, ...] = ALGORITHMS

    def __post_init__(self):
        if self.count < 1:
            raise ConfigError(f"count must be >= 1, got {self.count}")
        if not 1 <= self.nodes_min <= self.nodes_max:
            raise ConfigError(f"bad node range [{self.nodes_min}, {self.nodes_max}]")
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise ConfigError(f"radius must be > 0, got {self.radius}")
        if not (math.isfinite(self.energy_min) and math.isfinite(self.energy_max)
                and 0 <= self.energy_min <= self.energy_max):
            raise ConfigError(f"bad energy range [{self.energy_min}, {self.energy_max}]")
        if not self.strategies:
            raise ConfigError("strategy list is empty")
        unknown = [s for s in self.strategies if s not in ALGORITHMS]
        if unknown:
            raise ConfigError(f"unknown strategies {unknown}; expected from {ALGORITHMS}")


def random_geometric_graph(n: int, radius: float, energy_range: tuple[float, float],
                           rng: random.Random) -> SensorGraph:
    """One unit-disk draw; may come out disconnected."""
    positions = [(rng.random(), rng.random()) for _ in range(n)]
    lo, hi = energy_range
    graph = SensorGraph({i: rng.uniform(lo, hi) for i in range(n)})
    for i in range(n):
        for j in range(i + 1, n):
            if math.dist(positions[i], positions[j]) <= radius:
                graph.add_edge(i, j)
    return graph


def random_connected_graph(n: int, radius: float, energy_range: tuple[float, float],
                           rng: random.Random,
                           max_redraws: int = MAX_REDRAWS) -> tuple[SensorGraph, int]:
    """Rejection-sample a connected instance; returns (graph, redraws)."""
    redraws = 0
    while True:
        graph = random_geometric_graph(n, radius, energy_range, rng)
        if graph.is_connected():
            return graph, redraws
        redraws += 1
        if redraws >= max_redraws:
            raise GenerationError(
                f"no connected {n}-node sample within {max_redraws} redraws at radius {radius}")


def instance_stream(config: ExperimentConfig) -> Iterator[tuple[int, SensorGraph, int]]:
    """Deterministic stream of (index, graph, redraws) under config.seed."""
    rng = random.Random(config.seed)
    for index in range(config.count):
        n = rng.randint(config.nodes_min, config.nodes_max)
        graph, redraws = random_connected_graph(
            n, config.radius, (config.energy_min, config.energy_max), rng)
        yield index, graph, redraws
