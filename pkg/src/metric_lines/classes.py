"""Graph-class predicates and the plane-embedding local-connectivity test.

Planarity is never computed here: rotation systems are inputs, validated
against adjacency and certified by the Euler count after face tracing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph, GraphFormatError, bits, bitmask, cycle_graph, complete_graph


def is_connected(g: Graph) -> bool:
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.full_mask


def _cut_vertices_and_bridges(g: Graph) -> tuple[set[int], list[tuple[int, int]]]:
    """Iterative DFS lowpoint pass over every component."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts: set[int] = set()
    bridges: list[tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack = [(root, iter(bits(g.adj[root])))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    parent[u] = v
                    if v == root:
                        root_children += 1
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, iter(bits(g.adj[u]))))
                    advanced = True
                    break
                if u != parent[v] and disc[u] < low[v]:
                    low[v] = disc[u]
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] > disc[p]:
                    bridges.append((p, v) if p < v else (v, p))
                if p != root and low[v] >= disc[p]:
                    cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return cuts, sorted(bridges)


def bridges(g: Graph) -> list[tuple[int, int]]:
    """Edges whose removal disconnects their component, sorted."""
    return _cut_vertices_and_bridges(g)[1]


def is_biconnected(g: Graph) -> bool:
    """Connected, n >= 3, and free of cut vertices."""
    if g.n < 3 or not is_connected(g):
        return False
    cuts, _ = _cut_vertices_and_bridges(g)
    return not cuts


def _induced_connected(g: Graph, members: int) -> bool:
    """Does the induced subgraph on the bitset `members` connect?"""
    if members == 0:
        return False
    seen = frontier = members & -members
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v] & members
        frontier = nxt & ~seen
        seen |= nxt
    return seen == members


def is_locally_connected(g: Graph) -> bool:
    """Every open neighborhood induces a connected subgraph.

    An empty neighborhood (isolated vertex) counts as not connected, so a
    one-vertex graph fails the predicate.
    """
    return all(_induced_connected(g, g.adj[v]) for v in range(g.n))


def is_lc_member(g: Graph) -> bool:
    """Connected and locally connected."""
    return is_connected(g) and is_locally_connected(g)


def is_chordal(g: Graph) -> bool:
    """Maximum-cardinality search, then explicit simpliciality verification
    of the produced ordering (the ordering is not trusted by construction)."""
    n = g.n
    weight = [0] * n
    order: list[int] = []
    numbered = 0
    for _ in range(n):
        v = max(
            (u for u in range(n) if not numbered >> u & 1),
            key=lambda u: (weight[u], -u),
        )
        order.append(v)
        numbered |= 1 << v
        for u in bits(g.adj[v] & ~numbered):
            weight[u] += 1
    # Reverse visit order is the candidate perfect elimination ordering.
    peo = order[::-1]
    eliminated = 0
    for v in peo:
        later = g.adj[v] & ~eliminated & ~(1 << v)
        for u in bits(later):
            if later & ~(1 << u) & ~g.adj[u]:
                return False
        eliminated |= 1 << v
    return True


def is_module(g: Graph, members) -> bool:
    """True iff every outside vertex sees all of `members` or none of it.

    `members` may be a bitset or an iterable of vertices; must be nonempty.
    """
    m = members if isinstance(members, int) else bitmask(members)
    if m == 0:
        raise ValueError("module test needs a nonempty vertex set")
    if m & ~g.full_mask:
        raise ValueError("vertex set outside 0..n-1")
    for z in bits(g.full_mask & ~m):
        inside = g.adj[z] & m
        if inside != 0 and inside != m:
            return False
    return True


# ---------------------------------------------------------------------------
# Rotation systems and face tracing

@dataclass(frozen=True)
class RotationSystem:
    """Cyclic neighbor order per vertex; fixes an embedding up to reflection."""

    n: int
    rot: tuple[tuple[int, ...], ...]


def parse_rotation(text: str) -> RotationSystem:
    """Parse the 'v: n1 n2 n3 ...' per-line rotation format."""
    entries: dict[int, tuple[int, ...]] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, tail = line.partition(":")
        try:
            v = int(head)
            nbrs = tuple(int(t) for t in tail.split())
        except ValueError as exc:
            raise GraphFormatError(f"bad rotation line {raw!r}") from exc
        if v in entries:
            raise GraphFormatError(f"duplicate rotation line for vertex {v}")
        entries[v] = nbrs
    if not entries or sorted(entries) != list(range(len(entries))):
        raise GraphFormatError("rotation lines must cover vertices 0..n-1")
    n = len(entries)
    return RotationSystem(n, tuple(entries[v] for v in range(n)))


def _check_rotation(g: Graph, r: RotationSystem) -> None:
    if r.n != g.n:
        raise ValueError("rotation size mismatch")
    for v in range(g.n):
        if len(set(r.rot[v])) != len(r.rot[v]) or bitmask(r.rot[v]) != g.adj[v]:
            raise ValueError(f"rotation at vertex {v} inconsistent with adjacency")


@dataclass(frozen=True)
class FaceSet:
    """Closed walks traced from a rotation system; one per face."""

    faces: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.faces)


def trace_faces(g: Graph, r: RotationSystem) -> FaceSet:
    """Trace every face: each directed edge is used exactly once."""
    _check_rotation(g, r)
    if not is_connected(g):
        raise ValueError("face tracing needs a connected graph")
    succ = {}
    for v in range(g.n):
        order = r.rot[v]
        for i, u in enumerate(order):
            # Arriving u -> v leaves along the neighbor after u in v's cycle.
            succ[(u, v)] = order[(i + 1) % len(order)]
    unused = set(succ)
    faces = []
    while unused:
        start = min(unused)
        walk = []
        edge = start
        while True:
            unused.discard(edge)
            walk.append(edge[0])
            edge = (edge[1], succ[edge])
            if edge == start:
                break
        faces.append(tuple(walk))
    return FaceSet(tuple(faces))


def locally_connected_by_embedding(g: Graph, r: RotationSystem) -> bool:
    """Plane-graph criterion: every vertex lies on at most one face whose
    boundary walk is not a triangle. The Euler count certifies that the
    supplied rotation is a plane embedding."""
    fs = trace_faces(g, r)
    if g.n - g.edge_count + fs.count != 2:
        raise ValueError("not a plane embedding (Euler check failed)")
    nontriangular = [0] * g.n
    for walk in fs.faces:
        if len(walk) != 3:
            for v in set(walk):
                nontriangular[v] += 1
    return all(c <= 1 for c in nontriangular)


def rotation_from_positions(g: Graph, pos: dict[int, tuple[float, float]]) -> RotationSystem:
    """Rotation of a straight-line drawing: neighbors sorted by angle."""
    rot = []
    for v in range(g.n):
        xv, yv = pos[v]
        nbrs = sorted(
            bits(g.adj[v]),
            key=lambda u: math.atan2(pos[u][1] - yv, pos[u][0] - xv),
        )
        rot.append(tuple(nbrs))
    return RotationSystem(g.n, tuple(rot))


# ---------------------------------------------------------------------------
# Embedded corpus: plane graphs with hand-supplied drawings

def wheel_graph(k: int) -> Graph:
    """Hub vertex 0 joined to the cycle 1..k."""
    if k < 3:
        raise ValueError("wheel rim needs at least 3 vertices")
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, i % k + 1) for i in range(1, k + 1)]
    return Graph.from_edges(k + 1, edges)


def _ring(ids, radius, offset=0.0):
    k = len(ids)
    return {
        v: (radius * math.cos(offset + 2 * math.pi * i / k),
            radius * math.sin(offset + 2 * math.pi * i / k))
        for i, v in enumerate(ids)
    }


def _octahedron_embedding() -> tuple[Graph, RotationSystem]:
    from .graph import complete_multipartite

    g = complete_multipartite([2, 2, 2])
    # Parts {0,1}, {2,3}, {4,5}: outer triangle 0,2,4; inner triangle
    # placed so each inner vertex avoids only its own part.
    pos = _ring([0, 2, 4], 2.0, math.pi / 2)
    pos.update(_ring([3, 5, 1], 1.0, math.pi / 2 + math.pi / 3))
    return g, rotation_from_positions(g, pos)


def _stacked_triangulation(splits: int) -> tuple[Graph, RotationSystem]:
    """K4 grown by repeatedly inserting a vertex into an inner face."""
    pos = {0: (0.0, 2.0), 1: (-2.0, -1.5), 2: (2.0, -1.5), 3: (0.0, -0.3)}
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    faces = [(0, 1, 3), (1, 2, 3), (2, 0, 3)]
    for i in range(splits):
        a, b, c = faces.pop(i % len(faces))
        v = len(pos)
        pos[v] = (
            (pos[a][0] + pos[b][0] + pos[c][0]) / 3,
            (pos[a][1] + pos[b][1] + pos[c][1]) / 3,
        )
        edges += [(v, a), (v, b), (v, c)]
        faces += [(a, b, v), (b, c, v), (c, a, v)]
    g = Graph.from_edges(len(pos), edges)
    return g, rotation_from_positions(g, pos)


def embedded_corpus() -> list[tuple[str, Graph, RotationSystem]]:
    """Plane graphs with supplied embeddings for the embedding-criterion
    equivalence sweep: cycles, K4, wheels, the octahedron, and two stacked
    triangulations."""
    out: list[tuple[str, Graph, RotationSystem]] = []
    for n in range(4, 9):
        g = cycle_graph(n)
        out.append((f"C{n}", g, rotation_from_positions(g, _ring(range(n), 1.0))))
    k4 = complete_graph(4)
    k4_pos = {0: (0.0, 2.0), 1: (-2.0, -1.5), 2: (2.0, -1.5), 3: (0.0, -0.3)}
    out.append(("K4", k4, rotation_from_positions(k4, k4_pos)))
    for k in range(4, 8):
        g = wheel_graph(k)
        pos = {0: (0.0, 0.0)}
        pos.update(_ring(range(1, k + 1), 1.0))
        out.append((f"W{k}", g, rotation_from_positions(g, pos)))
    g, rot = _octahedron_embedding()
    out.append(("octahedron", g, rot))
    for splits, name in ((1, "stacked5"), (3, "stacked7")):
        g, rot = _stacked_triangulation(splits)
        out.append((name, g, rot))
    return out
