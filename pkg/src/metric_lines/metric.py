"""Shortest-path metric, diameter, and the geodesic betweenness relation."""

from __future__ import annotations

from typing import Sequence

from .graph import DisconnectedError, Graph, bits


class DistanceMatrix:
    """All-pairs hop distances. Unreachable pairs hold the sentinel INF = n,
    strictly greater than any realizable distance, so plain integer
    comparisons work in hot loops."""

    __slots__ = ("n", "rows", "inf")

    def __init__(self, n: int, rows: Sequence[Sequence[int]]):
        self.n = n
        self.inf = n
        self.rows = tuple(tuple(r) for r in rows)

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.rows[v]

    @property
    def connected(self) -> bool:
        inf = self.inf
        return all(x < inf for row in self.rows for x in row)

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"


def _bfs_row(adj: Sequence[int], n: int, src: int) -> list[int]:
    row = [n] * n
    seen = frontier = 1 << src
    d = 0
    while frontier:
        for v in bits(frontier):
            row[v] = d
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= nxt
        d += 1
    return row


def apsp(g: Graph) -> DistanceMatrix:
    """Exact unweighted shortest-path distances via BFS from every vertex."""
    return DistanceMatrix(g.n, [_bfs_row(g.adj, g.n, s) for s in range(g.n)])


def diameter(d: DistanceMatrix) -> int:
    """Largest pairwise distance; raises on disconnected input."""
    best = 0
    inf = d.inf
    for row in d.rows:
        m = max(row)
        if m >= inf:
            raise DisconnectedError("disconnected: diameter undefined")
        if m > best:
            best = m
    return best


def between(d: DistanceMatrix, a: int, b: int, c: int) -> bool:
    """True iff b lies between a and c: d(a,c) = d(a,b) + d(b,c).

    The three vertices must be pairwise distinct.
    """
    if a == b or b == c or a == c:
        raise ValueError(f"triple ({a},{b},{c}) is not pairwise distinct")
    ra = d.rows[a]
    return ra[c] == ra[b] + d.rows[b][c]
