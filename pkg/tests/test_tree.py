from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clmt.errors import ContractError, DisconnectedError
from clmt.graph import SensorGraph
from clmt.tree import (
    AggregationTree,
    branch_energy,
    hop_distances,
    shortest_path_tree,
    tree_energy,
    validate,
    validation_errors,
)
from helpers import bfs_levels, random_spanning_tree, sensor_graphs

# The sweep's tree on the four-cycle fixture, frozen from a hand run.
CLMT_CYC4 = AggregationTree(root=4, parent={1: 4, 3: 4, 2: 1})


class TestValidate:
    def test_star_over_triangle(self, g_tri):
        assert validate(AggregationTree(3, {1: 3, 2: 3}), g_tri)

    def test_two_cycle_rejected(self, g_tri):
        tree = AggregationTree(3, {1: 2, 2: 1})
        assert not validate(tree, g_tri)
        assert any("cycle" in reason for reason in validation_errors(tree, g_tri))

    def test_missing_node_rejected(self, g_cyc4):
        tree = AggregationTree(4, {1: 4, 3: 4})
        assert not validate(tree, g_cyc4)
        assert any("not spanned" in r for r in validation_errors(tree, g_cyc4))

    def test_non_edge_parent_rejected(self, g_path):
        tree = AggregationTree(1, {2: 1, 3: 1})  # 1-3 is not an edge
        assert not validate(tree, g_path)

    def test_root_with_parent_rejected(self, g_tri):
        tree = AggregationTree(3, {1: 3, 2: 3, 3: 1})
        assert not validate(tree, g_tri)

    def test_foreign_node_rejected(self, g_tri):
        tree = AggregationTree(3, {1: 3, 2: 3, 9: 3})
        assert not validate(tree, g_tri)

    @given(sensor_graphs(min_nodes=2, max_nodes=7, connected=True),
           st.randoms(use_true_random=False))
    def test_mutations_of_valid_trees_rejected(self, g, rnd):
        tree = random_spanning_tree(g, random.Random(rnd.randint(0, 2**32)))
        assert validate(tree, g)
        # Drop one spanned node.
        victim = rnd.choice(sorted(tree.parent))
        dropped = {c: p for c, p in tree.parent.items() if c != victim}
        assert not validate(AggregationTree(tree.root, dropped), g)
        # Point one child at a non-adjacent node, when one exists.
        for child in sorted(tree.parent):
            strangers = sorted(set(g.node_ids()) - g.neighbors(child) - {child})
            if strangers:
                twisted = dict(tree.parent)
                twisted[child] = rnd.choice(strangers)
                assert not validate(AggregationTree(tree.root, twisted), g)
                break
        # Introduce a two-cycle between a child and its non-root parent.
        for child, parent in sorted(tree.parent.items()):
            if parent != tree.root:
                looped = dict(tree.parent)
                looped[parent] = child
                assert not validate(AggregationTree(tree.root, looped), g)
                break


class TestBranchEnergy:
    def test_path_tree(self, g_path):
        tree = AggregationTree(2, {1: 2, 3: 2})
        assert branch_energy(tree, g_path, 1) == 1.0

    def test_cyc4_leaf2_passes_two_parents(self, g_cyc4):
        assert branch_energy(CLMT_CYC4, g_cyc4, 2) == 2.0

    def test_cyc4_leaf3_sees_root_only(self, g_cyc4):
        assert branch_energy(CLMT_CYC4, g_cyc4, 3) == 2.0

    def test_non_leaf_rejected(self, g_cyc4):
        with pytest.raises(ContractError):
            branch_energy(CLMT_CYC4, g_cyc4, 1)

    def test_single_node_tree_returns_own_energy(self):
        g = SensorGraph({5: 7.5})
        assert branch_energy(AggregationTree(5, {}), g, 5) == 7.5


class TestTreeEnergy:
    def test_path_tree(self, g_path):
        assert tree_energy(AggregationTree(2, {1: 2, 3: 2}), g_path) == 1.0

    def test_cyc4_clmt_tree(self, g_cyc4):
        assert tree_energy(CLMT_CYC4, g_cyc4) == 2.0

    def test_star_over_triangle(self, g_tri):
        assert tree_energy(AggregationTree(3, {1: 3, 2: 3}), g_tri) == 3.0

    def test_single_node(self):
        g = SensorGraph({5: 7.5})
        assert tree_energy(AggregationTree(5, {}), g) == 7.5

    def test_invalid_tree_rejected(self, g_cyc4):
        with pytest.raises(ContractError):
            tree_energy(AggregationTree(4, {1: 4}), g_cyc4)

    @given(sensor_graphs(min_nodes=2, max_nodes=8, connected=True),
           st.integers(0, 2**32))
    def test_three_way_equality(self, g, seed):
        tree = random_spanning_tree(g, random.Random(seed))
        by_non_leaf = min(g.energy(v) for v in tree.non_leaf_nodes())
        by_branches = min(branch_energy(tree, g, leaf) for leaf in tree.leaves())
        assert by_non_leaf == by_branches == tree_energy(tree, g)


class TestNonLeafNodes:
    def test_cyc4_clmt(self):
        assert CLMT_CYC4.non_leaf_nodes() == {4, 1}

    def test_star(self):
        assert AggregationTree(3, {1: 3, 2: 3}).non_leaf_nodes() == {3}

    def test_single_node(self):
        assert AggregationTree(5, {}).non_leaf_nodes() == set()


class TestShortestPathTree:
    def test_pruned_cyc4(self, g_cyc4):
        pruned = SensorGraph(g_cyc4.energies(), [(1, 2), (3, 4), (4, 1)])
        tree = shortest_path_tree(pruned, 4)
        assert tree.parent == {1: 4, 3: 4, 2: 1}

    def test_triangle(self, g_tri):
        assert shortest_path_tree(g_tri, 3).parent == {1: 3, 2: 3}

    def test_energy_tie_break_prefers_stronger_parent(self, g_cyc4):
        # Node 3 sits two hops from root 1 and picks 4 (2.0 J) over 2 (1.0 J).
        tree = shortest_path_tree(g_cyc4, 1)
        assert tree.parent[3] == 4

    def test_disconnected_rejected(self):
        g = SensorGraph({1: 1.0, 2: 1.0, 3: 1.0}, [(1, 2)])
        with pytest.raises(DisconnectedError):
            shortest_path_tree(g, 1)

    @given(sensor_graphs(min_nodes=1, max_nodes=8, connected=True))
    def test_depths_match_bfs_levels(self, g):
        root = g.node_ids()[0]
        tree = shortest_path_tree(g, root)
        levels = bfs_levels(g, root)
        for v in g.node_ids():
            assert len(tree.path_to_root(v)) - 1 == levels[v]

    @given(sensor_graphs(min_nodes=1, max_nodes=8, connected=True))
    def test_result_validates(self, g):
        root = g.node_ids()[-1]
        assert validate(shortest_path_tree(g, root), g)


def test_hop_distances_partial_on_disconnected():
    g = SensorGraph({1: 1.0, 2: 1.0, 3: 1.0}, [(1, 2)])
    assert hop_distances(g, 1) == {1: 0, 2: 1}


def test_path_to_root_detects_cycles():
    tree = AggregationTree(3, {1: 2, 2: 1})
    with pytest.raises(ContractError):
        tree.path_to_root(1)
