from __future__ import annotations

import random

import pytest

from oracles import brute_cut_vertices, random_connected_graph
from zagreb.errors import (
    AcyclicGraph,
    Disconnected,
    InvalidParameters,
    NotABlock,
)
from zagreb.graphs import Graph, complete_graph, cycle_graph, path_graph, star_graph
from zagreb.indices import zagreb_m1, zagreb_m2
from zagreb.structure import (
    construct_cnk,
    cut_vertices,
    decompose,
    hanging_paths,
    in_vnk,
    is_cnk,
    is_cycle_block,
    pendant_structure,
    two_core,
)


def butterfly() -> Graph:
    return Graph.build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


class TestCutVertices:
    def test_two_connected_has_none(self):
        assert cut_vertices(cycle_graph(6)) == frozenset()

    def test_path_internals(self):
        assert cut_vertices(path_graph(5)) == {1, 2, 3}

    def test_tadpole_matches_oracle(self):
        g = construct_cnk(6, 2)
        assert cut_vertices(g) == brute_cut_vertices(g) == {0, 4}

    def test_disconnected_rejected(self):
        with pytest.raises(Disconnected):
            cut_vertices(Graph.build(4, [(0, 1), (2, 3)]))

    def test_random_agreement_with_removal_oracle(self):
        rng = random.Random(42)
        for _ in range(150):
            g = random_connected_graph(rng, rng.randrange(2, 11))
            assert cut_vertices(g) == brute_cut_vertices(g)


class TestDecompose:
    def test_tadpole(self):
        g = construct_cnk(6, 2)
        deco = decompose(g)
        assert sorted(sorted(b) for b in deco.blocks) == [
            [0, 1, 2, 3],
            [0, 4],
            [4, 5],
        ]
        assert deco.cut_vertices == {0, 4}
        flags = dict(zip(deco.blocks, deco.endblock_flags))
        assert flags[frozenset({0, 1, 2, 3})] is True
        assert flags[frozenset({0, 4})] is False
        assert flags[frozenset({4, 5})] is True

    def test_k4_single_block(self):
        deco = decompose(complete_graph(4))
        assert len(deco.blocks) == 1 and not deco.cut_vertices

    def test_p3_two_trivial_blocks(self):
        deco = decompose(path_graph(3))
        assert sorted(sorted(b) for b in deco.blocks) == [[0, 1], [1, 2]]
        assert deco.cut_vertices == {1}
        assert deco.endblock_flags == (True, True)

    def test_block_cut_tree_is_a_tree(self, small_connected):
        for n in range(2, 7):
            for g in small_connected(n):
                deco = decompose(g)
                nodes = len(deco.blocks) + len(deco.cut_vertices)
                edges = deco.block_cut_tree
                assert len(edges) == nodes - 1
                # connectivity of the bipartite tree
                adj: dict = {}
                for bi, v in edges:
                    adj.setdefault(("b", bi), set()).add(("c", v))
                    adj.setdefault(("c", v), set()).add(("b", bi))
                for bi in range(len(deco.blocks)):
                    adj.setdefault(("b", bi), set())
                seen = set()
                stack = [next(iter(adj))] if adj else []
                while stack:
                    x = stack.pop()
                    if x in seen:
                        continue
                    seen.add(x)
                    stack.extend(adj[x])
                assert len(seen) == nodes

    def test_edges_partition_across_blocks(self, small_connected):
        for n in range(2, 7):
            for g in small_connected(n):
                deco = decompose(g)
                for u, v in g.edges():
                    holders = [b for b in deco.blocks if u in b and v in b]
                    assert len(holders) == 1
                multi = {
                    v
                    for v in range(g.n)
                    if sum(v in b for b in deco.blocks) >= 2
                }
                assert multi == deco.cut_vertices


class TestCycleBlocks:
    def test_tadpole_cycle_block(self):
        g = construct_cnk(6, 2)
        assert is_cycle_block(g, frozenset({0, 1, 2, 3}))
        assert not is_cycle_block(g, frozenset({0, 4}))

    def test_k4_not_a_cycle(self):
        assert not is_cycle_block(complete_graph(4), frozenset({0, 1, 2, 3}))

    def test_not_a_block(self):
        with pytest.raises(NotABlock):
            is_cycle_block(complete_graph(4), frozenset({0, 1}))


class TestPendants:
    def test_tadpole_single_path(self):
        pend = pendant_structure(construct_cnk(6, 2))
        assert pend.core == {0, 1, 2, 3}
        assert len(pend.pendant_trees) == 1
        (path,) = pend.pendant_paths
        assert path.anchor == 0 and path.vertices == (4, 5) and path.length == 2

    def test_cycle_has_none(self):
        pend = pendant_structure(cycle_graph(5))
        assert not pend.pendant_trees and not pend.pendant_paths

    def test_star_tree_is_not_a_path(self):
        # triangle 0,1,2 with a 2-leaf star center 3 hanging at 0
        g = Graph.build(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (3, 5)])
        pend = pendant_structure(g)
        assert len(pend.pendant_trees) == 1
        assert pend.pendant_trees[0].vertices == {3, 4, 5}
        assert not pend.pendant_paths

    def test_two_pendants_same_anchor_are_two_trees(self):
        g = Graph.build(5, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)])
        pend = pendant_structure(g)
        assert len(pend.pendant_trees) == 2
        assert len(pend.pendant_paths) == 2

    def test_acyclic_rejected(self):
        with pytest.raises(AcyclicGraph):
            pendant_structure(path_graph(5))

    def test_two_core_strip(self):
        assert two_core(construct_cnk(8, 3)) == {0, 1, 2, 3, 4}

    def test_hanging_paths(self):
        g = construct_cnk(7, 3)
        assert hanging_paths(g, 0) == [(4, 5, 6)]


class TestTadpoleFamily:
    def test_smallest(self):
        g = construct_cnk(4, 1)
        assert zagreb_m1(g) == 18
        assert len(cut_vertices(g)) == 1

    def test_example_6_2(self):
        g = construct_cnk(6, 2)
        assert len(cut_vertices(g)) == 2

    def test_invalid_parameters(self):
        with pytest.raises(InvalidParameters):
            construct_cnk(5, 3)
        with pytest.raises(InvalidParameters):
            construct_cnk(3, 1)
        with pytest.raises(InvalidParameters):
            construct_cnk(6, 0)

    def test_family_invariants_to_n60(self):
        for n in range(4, 61):
            for k in range(1, n - 2):
                g = construct_cnk(n, k)
                assert in_vnk(g, n, k)
                assert zagreb_m1(g) == 4 * n + 2
                if k >= 2:
                    assert zagreb_m2(g) == 4 * n + 4
                else:
                    assert zagreb_m2(g) == 4 * n + 3
                deco = decompose(g)
                cycles = [b for b in deco.blocks if len(b) >= 3]
                assert len(cycles) == 1 and len(cycles[0]) == n - k
                pend = pendant_structure(g)
                assert len(pend.pendant_paths) == 1
                assert pend.pendant_paths[0].length == k

    def test_recognizer_accepts_family(self):
        for n in range(4, 61):
            for k in range(1, n - 2):
                assert is_cnk(construct_cnk(n, k))

    def test_recognizer_rejects(self):
        assert not is_cnk(butterfly())
        assert not is_cnk(cycle_graph(6))
        assert not is_cnk(path_graph(6))
        assert not is_cnk(star_graph(5))

    def test_recognizer_is_label_independent(self):
        rng = random.Random(11)
        for n, k in [(7, 2), (10, 4), (40, 10)]:
            g = construct_cnk(n, k)
            perm = list(range(n))
            rng.shuffle(perm)
            assert is_cnk(g.relabel(perm))


class TestClassMembership:
    def test_examples(self):
        assert in_vnk(construct_cnk(6, 2), 6, 2)
        assert not in_vnk(path_graph(6), 6, 4)
        assert not in_vnk(cycle_graph(6), 6, 1)

    def test_disconnected_is_false(self):
        assert not in_vnk(Graph.build(6, [(0, 1), (2, 3), (4, 5)]), 6, 1)
