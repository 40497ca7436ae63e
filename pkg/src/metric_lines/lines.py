"""Lines of the graph metric, line systems, pencils, and the diagnostic
partitions used by the diameter-2 and diameter-3 verification suites.

The line of a pair a, b is the set of vertices c such that some shortest
path contains a, b and c; equivalently c = a, c = b, or one of the three
betweenness arrangements (c between a,b; a between c,b; b between a,c)
holds in the hop metric.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .graph import DisconnectedError, Graph, bits
from .metric import DistanceMatrix, apsp, diameter


@dataclass(frozen=True)
class Line:
    """A line: member bitset plus one generating pair."""

    members: int
    a: int
    b: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(bits(self.members))


def _line_members(rows: Sequence[Sequence[int]], n: int, a: int, b: int) -> int:
    ra, rb = rows[a], rows[b]
    dab = ra[b]
    members = (1 << a) | (1 << b)
    for c in range(n):
        if c == a or c == b:
            continue
        ca, cb = ra[c], rb[c]
        if ca + cb == dab or ca + dab == cb or cb + dab == ca:
            members |= 1 << c
    return members


def _require_connected(d: DistanceMatrix) -> None:
    if not d.connected:
        raise DisconnectedError("lines require a connected graph")


def line(d: DistanceMatrix, a: int, b: int) -> Line:
    """The line generated by the pair a, b."""
    if a == b:
        raise ValueError("line needs two distinct vertices")
    _require_connected(d)
    return Line(_line_members(d.rows, d.n, a, b), a, b)


@dataclass(frozen=True)
class LineSystem:
    """The distinct lines of a connected graph, with generating pairs.

    Lines are identified by member set only; `lines` is sorted ascending
    by bitset value for deterministic iteration.
    """

    n: int
    lines: tuple[int, ...]
    generators: Mapping[int, tuple[tuple[int, int], ...]]

    @property
    def count(self) -> int:
        return len(self.lines)

    @property
    def universal(self) -> bool:
        return (1 << self.n) - 1 in self.generators

    def pair_line(self, a: int, b: int) -> int:
        """Member bitset of the line generated by a, b."""
        key = (a, b) if a < b else (b, a)
        return self._pair_map()[key]

    def _pair_map(self) -> dict[tuple[int, int], int]:
        m = getattr(self, "_pairs", None)
        if m is None:
            m = {}
            for mask, pairs in self.generators.items():
                for p in pairs:
                    m[p] = mask
            object.__setattr__(self, "_pairs", m)
        return m

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "lines": [list(bits(m)) for m in self.lines],
            "count": self.count,
            "universal": self.universal,
        }


def line_system(g: Graph, dist: DistanceMatrix | None = None) -> LineSystem:
    """All distinct lines over the C(n,2) generating pairs."""
    if g.n < 2:
        raise ValueError("line system needs >= 2 vertices")
    d = dist if dist is not None else apsp(g)
    _require_connected(d)
    rows, n = d.rows, g.n
    gens: dict[int, list[tuple[int, int]]] = {}
    for a in range(n):
        for b in range(a + 1, n):
            gens.setdefault(_line_members(rows, n, a, b), []).append((a, b))
    return LineSystem(
        n,
        tuple(sorted(gens)),
        {m: tuple(ps) for m, ps in gens.items()},
    )


def is_universal(g: Graph, l: Line) -> bool:
    return l.members == g.full_mask


def has_universal_line(g: Graph, dist: DistanceMatrix | None = None) -> bool:
    d = dist if dist is not None else apsp(g)
    _require_connected(d)
    rows, n, full = d.rows, g.n, g.full_mask
    for a in range(n):
        for b in range(a + 1, n):
            if _line_members(rows, n, a, b) == full:
                return True
    return False


def chen_chvatal_holds(g: Graph, dist: DistanceMatrix | None = None) -> bool:
    """Universal line exists, or at least as many lines as vertices."""
    ls = line_system(g, dist)
    return ls.universal or ls.count >= g.n


@dataclass(frozen=True)
class Pencil:
    """Lines through a fixed apex z, with the same-line classes of V \\ {z}.

    classes[i] and lines[i] are parallel: classes[i] is the bitset of
    vertices u with line(z,u) = lines[i]. Classes are sorted by least
    member.
    """

    z: int
    classes: tuple[int, ...]
    lines: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.lines)

    def class_of(self, u: int) -> int:
        for c in self.classes:
            if c >> u & 1:
                return c
        raise ValueError(f"vertex {u} is not in the pencil's ground set")


def pencil(g: Graph, z: int, dist: DistanceMatrix | None = None) -> Pencil:
    d = dist if dist is not None else apsp(g)
    _require_connected(d)
    rows, n = d.rows, g.n
    grouping: dict[int, int] = {}
    for u in range(n):
        if u == z:
            continue
        m = _line_members(rows, n, z, u)
        grouping[m] = grouping.get(m, 0) | (1 << u)
    items = sorted(grouping.items(), key=lambda kv: kv[1] & -kv[1])
    return Pencil(z, tuple(c for _, c in items), tuple(m for m, _ in items))


@dataclass(frozen=True)
class Diam3Partition:
    """Pencil split at one end x of a diametral pair (x, y), diameter >= 3.

    L0: lines of singleton classes. C1: lines of classes of size >= 2 that
    sit inside N(x). C2: the remaining multi-vertex classes. V1 is the
    union of C1 classes; V2 keeps, from each C2 class, the vertices within
    half the diameter of x (tested as 2*d <= diam, exactly). Cy12 collects
    the lines from y to V1 | V2.
    """

    x: int
    y: int
    L0: frozenset[int]
    C1: frozenset[int]
    C2: frozenset[int]
    V1: int
    V2: int
    Cy12: frozenset[int]


def diam3_partition(
    g: Graph, x: int, y: int, dist: DistanceMatrix | None = None
) -> Diam3Partition:
    d = dist if dist is not None else apsp(g)
    diam = diameter(d)
    if diam < 3:
        raise ValueError(f"diameter {diam} < 3")
    if d.rows[x][y] != diam:
        raise ValueError(f"({x},{y}) is not a diametral pair")
    p = pencil(g, x, d)
    nx = g.adj[x]
    l0, c1, c2 = set(), set(), set()
    v1 = v2 = 0
    rx = d.rows[x]
    for cls, ln in zip(p.classes, p.lines):
        if cls.bit_count() == 1:
            l0.add(ln)
        elif cls & ~nx == 0:
            c1.add(ln)
            v1 |= cls
        else:
            c2.add(ln)
            for u in bits(cls):
                if 2 * rx[u] <= diam:
                    v2 |= 1 << u
    rows, n = d.rows, g.n
    cy12 = frozenset(_line_members(rows, n, y, u) for u in bits(v1 | v2))
    return Diam3Partition(x, y, frozenset(l0), frozenset(c1), frozenset(c2), v1, v2, cy12)


@dataclass(frozen=True)
class Diam2Partition:
    """Neighborhood split at x in a diameter-2 graph.

    N(x) splits by same-line class size: A1 (singleton class), A2 (class of
    size exactly 2), A3 (class of size >= 3). A2p holds the A2 vertices with
    a non-neighbor in N(x) outside their class; A2pp is the rest. a3 counts
    the distinct lines from x into A3. The four line families collect, in
    order: lines generated inside an A3 class; lines between a split pair
    class and a non-adjacent class; lines between distinct A2pp classes;
    lines from N(x) \\ A2pp into A2pp.
    """

    x: int
    A1: int
    A2: int
    A3: int
    A2p: int
    A2pp: int
    a3: int
    family_a3: frozenset[int]
    family_a2p: frozenset[int]
    family_a2pp: frozenset[int]
    family_a2ppp: frozenset[int]


def diam2_partition(g: Graph, x: int, dist: DistanceMatrix | None = None) -> Diam2Partition:
    d = dist if dist is not None else apsp(g)
    diam = diameter(d)
    if diam != 2:
        raise ValueError(f"diameter {diam} != 2")
    p = pencil(g, x, d)
    nx = g.adj[x]
    rows, n = d.rows, g.n
    cls_of = {u: c for c in p.classes for u in bits(c)}
    a1 = a2 = a3_mask = 0
    a3_lines = set()
    for cls, ln in zip(p.classes, p.lines):
        in_nx = cls & nx
        if not in_nx:
            continue
        size = cls.bit_count()
        if size == 1:
            a1 |= in_nx
        elif size == 2:
            a2 |= in_nx
        else:
            a3_mask |= in_nx
            a3_lines.add(ln)
    a2p = 0
    for u in bits(a2):
        outside = nx & ~cls_of[u]
        if outside & ~g.adj[u]:
            a2p |= 1 << u
    a2pp = a2 & ~a2p

    fam_a3 = set()
    for cls in {cls_of[u] for u in bits(a3_mask)}:
        members = list(bits(cls))
        for i, s in enumerate(members):
            for t in members[i + 1:]:
                fam_a3.add(_line_members(rows, n, s, t))
    fam_a2p = set()
    for u in bits(a2p):
        cu = cls_of[u]
        for v in bits(nx & ~cu & ~g.adj[u]):
            cv = cls_of[v]
            for s in bits(cu):
                for t in bits(cv):
                    fam_a2p.add(_line_members(rows, n, s, t))
    fam_a2pp = set()
    for u in bits(a2pp):
        for v in bits(a2pp & ~cls_of[u]):
            if u < v:
                fam_a2pp.add(_line_members(rows, n, u, v))
    fam_a2ppp = set()
    for u in bits(nx & ~a2pp):
        for v in bits(a2pp):
            fam_a2ppp.add(_line_members(rows, n, u, v))
    return Diam2Partition(
        x,
        a1,
        a2,
        a3_mask,
        a2p,
        a2pp,
        len(a3_lines),
        frozenset(fam_a3),
        frozenset(fam_a2p),
        frozenset(fam_a2pp),
        frozenset(fam_a2ppp),
    )
