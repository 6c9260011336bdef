from __future__ import annotations

import pytest
from hypothesis import settings

from clmt.graph import SensorGraph

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture
def g_path() -> SensorGraph:
    """Three-node path with a forced low-energy relay in the middle."""
    return SensorGraph({1: 5.0, 2: 1.0, 3: 5.0}, [(1, 2), (2, 3)])


@pytest.fixture
def g_cyc4() -> SensorGraph:
    """Four-cycle whose sweep prunes twice before finding the bottleneck."""
    return SensorGraph({1: 4.0, 2: 1.0, 3: 4.0, 4: 2.0},
                       [(1, 2), (2, 3), (3, 4), (4, 1)])


@pytest.fixture
def g_tri() -> SensorGraph:
    """Complete triangle; no bottleneck exists."""
    return SensorGraph({1: 1.0, 2: 2.0, 3: 3.0}, [(1, 2), (1, 3), (2, 3)])
