"""Immutable bitset graphs, graph6 I/O, named families, canonical labeling.

Vertices are 0..n-1. Adjacency is stored as one Python int per vertex,
bit v of adj[u] set iff uv is an edge. All operations are pure; Graph
instances are safe to share across workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 512
MAX_CANONICAL_VERTICES = 10


class GraphFormatError(ValueError):
    """Malformed graph6 record, adjacency text, or rotation text."""


class DisconnectedError(ValueError):
    """Operation requires a connected graph."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bitmask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph with bitset adjacency rows. Immutable."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(adj) != n:
            raise ValueError("adjacency row count != n")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} references vertices >= {n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> int:
        """Neighborhood of v as a bitset."""
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1) << (v + 1)
            for u in bits(row):
                out.append((v, u))
        return out

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __getstate__(self):
        return (self.n, self.adj)

    def __setstate__(self, state):
        object.__setattr__(self, "n", state[0])
        object.__setattr__(self, "adj", state[1])


# ---------------------------------------------------------------------------
# graph6 encoding (standard bit packing, big-endian within bytes)

_G6_HEADER = ">>graph6<<"


def _pair_index(u: int, v: int) -> int:
    """Position of pair bit x_{u,v} (u < v) in graph6 bit order."""
    return v * (v - 1) // 2 + u


def _parse_g6_size(data: str) -> tuple[int, int]:
    """Return (n, chars consumed) from a graph6 size prefix."""
    if not data:
        raise GraphFormatError("empty graph6 record")
    c0 = ord(data[0])
    if c0 == 126:  # '~': long form
        if len(data) >= 2 and ord(data[1]) == 126:
            raise GraphFormatError("graph6 records beyond 258047 vertices unsupported")
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 length field")
        n = 0
        for ch in data[1:4]:
            o = ord(ch)
            if not 63 <= o <= 126:
                raise GraphFormatError(f"invalid graph6 byte {ch!r} in length field")
            n = (n << 6) | (o - 63)
        return n, 4
    if not 63 <= c0 <= 126:
        raise GraphFormatError(f"invalid graph6 byte {data[0]!r} in length field")
    return c0 - 63, 1


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (an optional '>>graph6<<' header is stripped)."""
    data = text.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    n, used = _parse_g6_size(data)
    if n < 1:
        raise GraphFormatError("graph6 record with zero vertices")
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graph6 record with {n} vertices exceeds cap {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    body = data[used:]
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise GraphFormatError(
            f"graph6 body length {len(body)} != expected {expected} for n={n}"
        )
    acc = 0
    for ch in body:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise GraphFormatError(f"invalid graph6 byte {ch!r}")
        acc = (acc << 6) | (o - 63)
    pad = 6 * expected - nbits
    if acc & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits in graph6 record")
    acc >>= pad
    adj = [0] * n
    for v in range(1, n):
        for u in range(v):
            if acc >> (nbits - 1 - _pair_index(u, v)) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, adj)


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 record (no header, no newline)."""
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    else:
        prefix = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    nbits = n * (n - 1) // 2
    acc = 0
    for v in range(1, n):
        row = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | (row >> u & 1)
    groups = (nbits + 5) // 6
    acc <<= 6 * groups - nbits
    body = "".join(chr(63 + (acc >> (6 * (groups - 1 - i)) & 63)) for i in range(groups))
    return prefix + body


def parse_adjacency_text(text: str) -> Graph:
    """Parse the fallback edge-list format: first line n, then one 'u v' per line.

    Semicolons are treated as whitespace; blank lines and '#' comments skipped.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].replace(";", " ").strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphFormatError("empty adjacency text")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise GraphFormatError(f"bad vertex count line {lines[0]!r}") from exc
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line {line!r}") from exc
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"bad edge ({u},{v}) for n={n}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Named families

def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts laid out consecutively from vertex 0."""
    if not parts:
        raise ValueError("empty part list")
    if any(p < 1 for p in parts):
        raise ValueError("part sizes must be positive")
    n = sum(parts)
    starts = list(itertools.accumulate((0,) + tuple(parts)))
    part_masks = [
        ((1 << parts[i]) - 1) << starts[i] for i in range(len(parts))
    ]
    full = (1 << n) - 1
    adj = [0] * n
    for i, m in enumerate(part_masks):
        other = full & ~m
        for v in bits(m):
            adj[v] = other
    return Graph(n, adj)


def complete_graph(n: int) -> Graph:
    return complete_multipartite([1] * n) if n > 1 else Graph(1, [0])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def matched_cliques(k: int) -> Graph:
    """Two k-cliques {0..k-1} and {k..2k-1} joined by the matching i -- i+k."""
    if k < 2:
        raise ValueError("matched_cliques needs k >= 2")
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            edges.append((i, j))
            edges.append((k + i, k + j))
        edges.append((i, k + i))
    return Graph.from_edges(2 * k, edges)


def _drop_edge(g: Graph, u: int, v: int) -> Graph:
    adj = list(g.adj)
    if not adj[u] >> v & 1:
        raise ValueError(f"no edge ({u},{v}) to delete")
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, adj)


def _house() -> Graph:
    # 4-cycle 0-1-2-3 with apex 4 completing the triangle 0-1-4.
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])


def _k4_matched_to_two_edges() -> Graph:
    # K4 on 0..3, vertex i matched to 4+i, plus the two disjoint edges 4-5, 6-7.
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    edges += [(i, 4 + i) for i in range(4)]
    edges += [(4, 5), (6, 7)]
    return Graph.from_edges(8, edges)


_NAMED_BUILDERS = {
    "H5_house": _house,
    "H6": lambda: matched_cliques(3),
    "H8": lambda: matched_cliques(4),
    "H6_prime": lambda: _drop_edge(matched_cliques(3), 0, 3),
    "H8_prime": lambda: _drop_edge(matched_cliques(4), 0, 4),
    "H8_doubleprime": _k4_matched_to_two_edges,
    "K122_prime": lambda: _drop_edge(complete_multipartite([1, 2, 2]), 0, 1),
    "K22": lambda: complete_multipartite([2, 2]),
    "K23": lambda: complete_multipartite([2, 3]),
    "K122": lambda: complete_multipartite([1, 2, 2]),
    "K222": lambda: complete_multipartite([2, 2, 2]),
    "K2222": lambda: complete_multipartite([2, 2, 2, 2]),
    "K113": lambda: complete_multipartite([1, 1, 3]),
}

NAMED_GRAPHS = tuple(_NAMED_BUILDERS)


def named_graph(name: str) -> Graph:
    """Build one of the named small graphs (see NAMED_GRAPHS)."""
    key = name.strip()
    lookup = {k.lower(): k for k in _NAMED_BUILDERS}
    canon = lookup.get(key.lower())
    if canon is None:
        raise ValueError(f"unknown graph name {name!r}; known: {', '.join(NAMED_GRAPHS)}")
    return _NAMED_BUILDERS[canon]()


# ---------------------------------------------------------------------------
# Relabeling, canonical form, isomorphism

def permute(g: Graph, pi: Sequence[int]) -> Graph:
    """Relabel: vertex v becomes pi[v]."""
    if sorted(pi) != list(range(g.n)):
        raise ValueError("pi is not a permutation of 0..n-1")
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << pi[u]
        adj[pi[v]] = row
    return Graph(g.n, adj)


@dataclass(frozen=True)
class CanonicalForm:
    """Relabeling-invariant encoding; equal iff the graphs are isomorphic."""

    bytes: bytes

    @property
    def graph6(self) -> str:
        return self.bytes.decode("ascii")


def _refine(adj: Sequence[int], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Equitable refinement; sub-cells ordered by neighbor-count profile."""
    while True:
        masks = [bitmask(c) for c in cells]
        out: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                prof = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(prof, []).append(v)
            if len(groups) > 1:
                changed = True
            for prof in sorted(groups):
                out.append(tuple(groups[prof]))
        if not changed:
            return out
        cells = out


def _encode_order(adj: Sequence[int], order: Sequence[int], n: int) -> int:
    """Upper-triangle bits of the relabeled graph, graph6 order, MSB first."""
    code = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _canonical_search(adj: Sequence[int], n: int) -> tuple[int, tuple[int, ...]]:
    """Minimum encoding over individualization-refinement leaves.

    The refinement orders cells by invariant keys only, and branching tries
    every vertex of the first non-singleton cell, so the leaf set is
    isomorphism-invariant and the minimum is a true canonical form.
    """
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(adj[v].bit_count(), []).append(v)
    initial = [tuple(by_deg[d]) for d in sorted(by_deg)]
    best_code = -1
    best_order: tuple[int, ...] = ()

    stack = [_refine(adj, initial)]
    while stack:
        cells = stack.pop()
        split_at = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if split_at is None:
            order = tuple(c[0] for c in cells)
            code = _encode_order(adj, order, n)
            if best_code < 0 or code < best_code:
                best_code, best_order = code, order
            continue
        cell = cells[split_at]
        for v in cell:
            rest = tuple(u for u in cell if u != v)
            branched = cells[:split_at] + [(v,), rest] + cells[split_at + 1:]
            stack.append(_refine(adj, branched))
    return best_code, best_order


def _canonical_order(g: Graph) -> tuple[int, ...]:
    if g.n > MAX_CANONICAL_VERTICES:
        raise ValueError(
            f"exact canonicalization capped at n <= {MAX_CANONICAL_VERTICES}, got {g.n}"
        )
    _, order = _canonical_search(g.adj, g.n)
    return order


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of g."""
    order = _canonical_order(g)
    pi = [0] * g.n
    for new, old in enumerate(order):
        pi[old] = new
    return permute(g, pi)


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form, encoded as the graph6 record of the canonical labeling."""
    return CanonicalForm(to_graph6(canonical_graph(g)).encode("ascii"))


def canonical_graph6(g: Graph) -> str:
    return canonical_form(g).graph6


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def _named_canonical_graph6(name: str) -> str:
    return canonical_graph6(named_graph(name))
