"""Shortest-path metric and betweenness."""

import random

import pytest

from metric_lines import (
    DisconnectedError,
    Graph,
    apsp,
    between,
    complete_graph,
    cycle_graph,
    diameter,
    named_graph,
    path_graph,
)
from metric_lines.verify import enumerate_connected
from conftest import dist_oracle


class TestApsp:
    def test_path(self):
        d = apsp(path_graph(3))
        assert d[0][2] == 2 and d[0][1] == 1

    def test_octahedron(self):
        g = named_graph("K222")
        d = apsp(g)
        for u in range(6):
            for v in range(6):
                if u == v:
                    assert d[u][v] == 0
                elif g.has_edge(u, v):
                    assert d[u][v] == 1
                else:
                    assert d[u][v] == 2

    def test_deleted_matching_pair_distance(self):
        # Dropping a matching edge from the k=3 matched cliques pushes the
        # matched pair to distance 3.
        d = apsp(named_graph("H6_prime"))
        assert d[0][3] == 3

    def test_disconnected_inf(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        d = apsp(g)
        assert d[0][2] == d.inf == 4
        assert not d.connected

    def test_against_matrix_power_oracle(self):
        for n in range(2, 7):
            for g in enumerate_connected(n):
                assert [list(r) for r in apsp(g).rows] == dist_oracle(g)

    def test_oracle_on_disconnected(self):
        rng = random.Random(9)
        for _ in range(30):
            n = rng.randint(2, 6)
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.3
            ]
            g = Graph.from_edges(n, edges)
            assert [list(r) for r in apsp(g).rows] == dist_oracle(g)


class TestDiameter:
    def test_complete(self):
        assert diameter(apsp(complete_graph(5))) == 1

    def test_named(self):
        assert diameter(apsp(named_graph("H6"))) == 2
        assert diameter(apsp(named_graph("H8_doubleprime"))) == 3

    def test_disconnected(self):
        g = Graph.from_edges(3, [(0, 1)])
        with pytest.raises(DisconnectedError):
            diameter(apsp(g))


class TestBetween:
    def test_path(self):
        d = apsp(path_graph(3))
        assert between(d, 0, 1, 2)

    def test_triangle_never(self):
        d = apsp(complete_graph(3))
        for t in [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]:
            assert not between(d, *t)

    def test_cycle4(self):
        d = apsp(cycle_graph(4))
        assert between(d, 0, 1, 2)
        assert not between(d, 1, 0, 2)

    def test_rejects_repeats(self):
        d = apsp(path_graph(3))
        with pytest.raises(ValueError):
            between(d, 0, 0, 2)

    def test_middle_is_exclusive(self):
        # When b sits strictly between a and c, neither a nor c can be the
        # middle vertex of the same triple.
        for n in range(3, 7):
            for g in enumerate_connected(n):
                d = apsp(g)
                for a in range(n):
                    for b in range(n):
                        for c in range(n):
                            if len({a, b, c}) < 3:
                                continue
                            if between(d, a, b, c):
                                assert not between(d, b, a, c)
                                assert not between(d, a, c, b)

    def test_no_vertex_between_adjacent(self):
        for n in range(3, 7):
            for g in enumerate_connected(n):
                d = apsp(g)
                for u, v in g.edges():
                    for w in range(n):
                        if w != u and w != v:
                            assert not between(d, u, w, v)
