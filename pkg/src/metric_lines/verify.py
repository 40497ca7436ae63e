"""Exhaustive small-graph enumeration, random sampling of locally connected
graphs, and the property-suite runner that certifies the toolkit's target
statements on a stream of graphs.

Property checks quantify over every valid parameter choice (every apex,
every diametral pair), never a sampled one, and report the lexicographically
least witness on failure so runs are reproducible.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .graph import (
    Graph,
    bits,
    canonical_graph6,
    is_isomorphic,
    matched_cliques,
    named_graph,
    parse_graph6,
    to_graph6,
    _canonical_search,
    _named_canonical_graph6,
    _pair_index,
)
from .metric import apsp, diameter
from .lines import _line_members, diam2_partition, diam3_partition, line_system, pencil
from .classes import bridges, is_biconnected, is_chordal, is_connected, is_lc_member, is_module

ENUMERATION_CAP = 7
SAMPLE_REJECTION_BUDGET = 1_000_000
SCHEMA = "metric-lines/1"

# Known connected graphs with fewer distinct lines than vertices among
# connected locally connected graphs.
EXPECTED_EXCEPTIONS = ("K122", "K222", "K2222")


class NoSamplesError(RuntimeError):
    """Rejection sampling exhausted its retry budget with zero acceptances."""


# ---------------------------------------------------------------------------
# Exhaustive enumeration of connected graphs up to isomorphism

def _connected_sorted_degree_masks(n: int):
    """Labeled connected graphs on n vertices whose degree sequence is
    non-decreasing, as edge-bit masks (numpy int64 list).

    Every isomorphism class keeps at least one labeled copy (relabel by
    degree), so canonical-form dedup over this subset is exhaustive while
    canonicalizing far fewer graphs than the full labeled space.
    """
    import numpy as np

    nbits = n * (n - 1) // 2
    total = 1 << nbits
    masks = np.arange(total, dtype=np.uint32)
    adj = [np.zeros(total, dtype=np.uint8) for _ in range(n)]
    for v in range(1, n):
        for u in range(v):
            bit = ((masks >> _pair_index(u, v)) & 1).astype(np.uint8)
            adj[u] |= bit << v
            adj[v] |= bit << u
    reach = np.ones(total, dtype=np.uint8)  # start set: vertex 0
    for _ in range(n - 1):
        nxt = reach.copy()
        for v in range(n):
            has = ((reach >> v) & 1).astype(bool)
            nxt[has] |= adj[v][has]
        if np.array_equal(nxt, reach):
            break
        reach = nxt
    keep = reach == (1 << n) - 1
    popcount = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)
    prev = popcount[adj[0]]
    for v in range(1, n):
        cur = popcount[adj[v]]
        keep &= prev <= cur
        prev = cur
    return masks[keep].tolist()


def _code_to_graph(code: int, n: int) -> Graph:
    """Rebuild a graph from its upper-triangle bit encoding (MSB first)."""
    nbits = n * (n - 1) // 2
    adj = [0] * n
    for v in range(1, n):
        for u in range(v):
            if code >> (nbits - 1 - _pair_index(u, v)) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, adj)


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class of connected
    graphs on n vertices, sorted by canonical graph6 string."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(
            f"in-process exhaustion capped at n <= {ENUMERATION_CAP}; "
            "use an external graph6 stream"
        )
    if n == 1:
        return (Graph(1, [0]),)
    pair_bits = [(_pair_index(u, v), u, v) for v in range(1, n) for u in range(v)]
    codes: set[int] = set()
    for mask in _connected_sorted_degree_masks(n):
        rows = [0] * n
        for p, u, v in pair_bits:
            if mask >> p & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        code, _ = _canonical_search(rows, n)
        codes.add(code)
    # For a fixed n, sorting by code equals sorting by canonical graph6.
    return tuple(_code_to_graph(c, n) for c in sorted(codes))


def sample_lc(n: int, p: float, seed: int, count: int) -> list[Graph]:
    """Rejection-sample Erdos-Renyi graphs, keeping connected locally
    connected ones, up to `count`. Reproducible under a fixed seed.

    Raises NoSamplesError if the retry budget (10^6 rejections per
    requested sample) expires with zero acceptances.
    """
    if not 0 < p < 1:
        raise ValueError(f"edge probability {p} outside (0,1)")
    if count < 1:
        raise ValueError("count must be positive")
    rng = random.Random(seed)
    out: list[Graph] = []
    rejections = 0
    budget = count * SAMPLE_REJECTION_BUDGET
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    while len(out) < count and rejections < budget:
        adj = [0] * n
        for u, v in pairs:
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        g = Graph(n, adj)
        if is_lc_member(g):
            out.append(g)
        else:
            rejections += 1
    if not out:
        raise NoSamplesError(
            f"no connected locally connected samples at n={n}, p={p} "
            f"within {budget} rejections"
        )
    return out


@dataclass(frozen=True)
class GraphStream:
    """Re-iterable source of connected graphs.

    kind: 'exhaustive' (n <= 7, one graph per isomorphism class),
    'file' (graph6 records, one per line), 'generated' (named families),
    or 'random' (fixed-seed locally connected samples).
    """

    kind: str
    n: int = 0
    path: str = ""
    names: tuple[str, ...] = ()
    p: float = 0.0
    seed: int = 0
    count: int = 0

    def __iter__(self) -> Iterator[Graph]:
        if self.kind == "exhaustive":
            return iter(_connected_classes(self.n))
        if self.kind == "file":
            def gen():
                with open(self.path, "r", encoding="ascii") as fh:
                    for line in fh:
                        line = line.strip()
                        if line:
                            yield parse_graph6(line)
            return gen()
        if self.kind == "generated":
            return (named_graph(name) for name in self.names)
        if self.kind == "random":
            return iter(sample_lc(self.n, self.p, self.seed, self.count))
        raise ValueError(f"unknown stream kind {self.kind!r}")

    def describe(self) -> str:
        if self.kind == "exhaustive":
            return f"exhaustive(n={self.n})"
        if self.kind == "file":
            return f"graph6_file({self.path})"
        if self.kind == "generated":
            return f"generated({','.join(self.names)})"
        return f"random(n={self.n}, p={self.p}, seed={self.seed}, count={self.count})"


def enumerate_connected(n: int) -> GraphStream:
    """All connected graphs on n vertices up to isomorphism (n <= 7)."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(
            f"in-process exhaustion capped at n <= {ENUMERATION_CAP}; "
            "use an external graph6 stream"
        )
    return GraphStream(kind="exhaustive", n=n)


def stream_from_graph6_file(path) -> GraphStream:
    return GraphStream(kind="file", path=str(path))


def stream_generated(names: Sequence[str]) -> GraphStream:
    return GraphStream(kind="generated", names=tuple(names))


def stream_random_lc(n: int, p: float, seed: int, count: int) -> GraphStream:
    return GraphStream(kind="random", n=n, p=p, seed=seed, count=count)


# ---------------------------------------------------------------------------
# Per-graph property suite

PROPERTY_NAMES = (
    "same_line_pairs_straddle_apex",
    "class_extension_neighbor",
    "outer_class_pair_lines",
    "diametral_far_lines_distinct",
    "diametral_pencils_disjoint",
    "near_far_pencil_split",
    "neighborhood_classes_independent_modules",
    "lines_respect_classes",
    "triple_class_line_family",
    "split_pair_line_family",
    "near_pencil_deficit",
    "dominant_pairs_exist",
    "mixed_neighborhood_forces_k122",
    "universal_or_enough_lines",
)


@dataclass(frozen=True)
class PropertyResult:
    status: str  # "pass" | "fail" | "na"
    witness: tuple | None = None

    def to_json(self):
        if self.status == "fail":
            return {"status": "fail", "witness": list(self.witness or ())}
        return {"status": self.status}


_PASS = PropertyResult("pass")
_NA = PropertyResult("na")


def _fail(*witness) -> PropertyResult:
    return PropertyResult("fail", tuple(witness))


@dataclass(frozen=True)
class VerificationReport:
    """Per-graph record of which target properties hold, with the least
    counterexample witness for each failure."""

    graph6: str
    n: int
    diameter: int
    line_count: int
    universal: bool
    lc: bool
    chordal: bool
    biconnected: bool
    properties: dict[str, PropertyResult]

    @property
    def failures(self) -> list[tuple[str, tuple | None]]:
        return [
            (name, res.witness)
            for name, res in self.properties.items()
            if res.status == "fail"
        ]

    def to_json_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "diameter": self.diameter,
            "line_count": self.line_count,
            "universal": self.universal,
            "lc": self.lc,
            "chordal": self.chordal,
            "biconnected": self.biconnected,
            "properties": {k: v.to_json() for k, v in self.properties.items()},
        }


class _Analysis:
    """Shared per-graph computations for the property checks."""

    def __init__(self, g: Graph):
        self.g = g
        self.d = apsp(g)
        if not self.d.connected:
            raise ValueError("property checks need a connected graph")
        self.rows = self.d.rows
        self.diam = diameter(self.d)
        self.system = line_system(g, self.d)
        self.pencils = [pencil(g, z, self.d) for z in range(g.n)]
        self._pair_lines: dict[tuple[int, int], int] = {}

    def pair_line(self, a: int, b: int) -> int:
        key = (a, b) if a < b else (b, a)
        m = self._pair_lines.get(key)
        if m is None:
            m = _line_members(self.rows, self.g.n, key[0], key[1])
            self._pair_lines[key] = m
        return m

    def class_of(self, z: int, u: int) -> int:
        return self.pencils[z].class_of(u)


def _betw(rows, a, b, c) -> bool:
    return rows[a][c] == rows[a][b] + rows[b][c]


def _check_same_line_pairs_straddle_apex(an: _Analysis) -> PropertyResult:
    # Two vertices on the same line through z always have z between them.
    rows = an.rows
    for z in range(an.g.n):
        for cls in an.pencils[z].classes:
            members = list(bits(cls))
            for i, a in enumerate(members):
                for b in members[i + 1:]:
                    if not _betw(rows, a, z, b):
                        return _fail(z, a, b)
    return _PASS


def _check_class_extension_neighbor(an: _Analysis) -> PropertyResult:
    # A multi-vertex class at z that extends past some vertex admits a
    # common neighbor u with the whole class inside N(u) & N(z) and z-b-u
    # geodesic for every class member b.
    g, rows = an.g, an.rows
    n = g.n
    for z in range(n):
        for cls in an.pencils[z].classes:
            if cls.bit_count() < 2:
                continue
            members = list(bits(cls))
            for a in members:
                if not any(
                    v != z and v != a and _betw(rows, z, a, v) for v in range(n)
                ):
                    continue
                ok = False
                for u in bits(g.adj[a]):
                    if cls & ~(g.adj[u] & g.adj[z]):
                        continue
                    if all(_betw(rows, z, b, u) for b in members):
                        ok = True
                        break
                if not ok:
                    return _fail(z, a)
    return _PASS


def _check_outer_class_pair_lines(an: _Analysis) -> PropertyResult:
    # For a multi-vertex class at z not inside N(z): lines generated inside
    # the class are pure-interior, contain z, and stay out of z's pencil.
    g, rows = an.g, an.rows
    n = g.n
    for z in range(n):
        pencil_masks = set(an.pencils[z].lines)
        for cls in an.pencils[z].classes:
            if cls.bit_count() < 2 or cls & ~g.adj[z] == 0:
                continue
            members = list(bits(cls))
            for i, u in enumerate(members):
                for v in members[i + 1:]:
                    mask = an.pair_line(u, v)
                    interior = (1 << u) | (1 << v)
                    for w in range(n):
                        if w != u and w != v and _betw(rows, u, w, v):
                            interior |= 1 << w
                    if mask != interior:
                        return _fail(z, u, v)
                    if not mask >> z & 1:
                        return _fail(z, u, v)
                    if mask in pencil_masks:
                        return _fail(z, u, v)
    return _PASS


def _diametral_pairs(an: _Analysis) -> list[tuple[int, int]]:
    return [
        (x, y)
        for x in range(an.g.n)
        for y in range(an.g.n)
        if x != y and an.rows[x][y] == an.diam
    ]


def _check_diametral_far_lines_distinct(an: _Analysis) -> PropertyResult:
    for x, y in _diametral_pairs(an):
        part = diam3_partition(an.g, x, y, an.d)
        seen: dict[int, int] = {}
        for u in bits(part.V1 | part.V2):
            mask = an.pair_line(y, u)
            if mask in seen:
                return _fail(x, y, seen[mask], u)
            seen[mask] = u
    return _PASS


def _check_diametral_pencils_disjoint(an: _Analysis) -> PropertyResult:
    for x, y in _diametral_pairs(an):
        part = diam3_partition(an.g, x, y, an.d)
        overlap = set(an.pencils[x].lines) & part.Cy12
        if overlap:
            return _fail(x, y, min(overlap))
    return _PASS


def _near_far_pencils(an: _Analysis, x: int) -> tuple[set[int], set[int], int]:
    g = an.g
    nx = g.adj[x]
    far = ~nx & g.full_mask & ~(1 << x)
    lx1 = {an.pair_line(x, u) for u in bits(nx)}
    lx2 = {an.pair_line(x, u) for u in bits(far)}
    return lx1, lx2, far


def _check_near_far_pencil_split(an: _Analysis) -> PropertyResult:
    # Diameter 2: lines from x to neighbors and to distance-2 vertices are
    # disjoint families, and the far family has one line per far vertex.
    for x in range(an.g.n):
        lx1, lx2, far = _near_far_pencils(an, x)
        if lx1 & lx2:
            return _fail(x, min(lx1 & lx2))
        if len(lx2) != far.bit_count():
            return _fail(x)
    return _PASS


def _check_neighborhood_classes_independent_modules(an: _Analysis) -> PropertyResult:
    g = an.g
    for x in range(g.n):
        seen = 0
        for u in bits(g.adj[x]):
            cls = an.class_of(x, u)
            if cls & seen:
                continue
            seen |= cls
            for a in bits(cls):
                if g.adj[a] & cls:
                    return _fail(x, u)  # not independent
            if not is_module(g, cls):
                return _fail(x, u)
    return _PASS


def _check_lines_respect_classes(an: _Analysis) -> PropertyResult:
    # Every line either contains a neighborhood class or misses it, for
    # classes not touching the generating pair; generated inside N(x) the
    # line swallows both classes (adjacent pair) or meets them exactly in
    # the pair (non-adjacent pair).
    g = an.g
    n = g.n
    for x in range(n):
        nx = g.adj[x]
        cls_of = {u: an.class_of(x, u) for u in bits(nx)}
        for v in range(n):
            for w in range(v + 1, n):
                mask = an.pair_line(v, w)
                vw = (1 << v) | (1 << w)
                for u in bits(nx & ~vw):
                    cu = cls_of[u]
                    if cu & vw:
                        continue
                    inter = cu & mask
                    if inter and inter != cu:
                        return _fail(x, v, w, u)
                if nx >> v & 1 and nx >> w & 1:
                    both = cls_of[v] | cls_of[w]
                    if g.adj[v] >> w & 1:
                        if both & ~mask:
                            return _fail(x, v, w)
                    elif both & mask != vw:
                        return _fail(x, v, w)
    return _PASS


def _check_triple_class_line_family(an: _Analysis) -> PropertyResult:
    for x in range(an.g.n):
        part = diam2_partition(an.g, x, an.d)
        lx = set(an.pencils[x].lines)
        if part.family_a3 & lx:
            return _fail(x, min(part.family_a3 & lx))
        if len(part.family_a3) < part.A3.bit_count():
            return _fail(x)
    return _PASS


def _check_split_pair_line_family(an: _Analysis) -> PropertyResult:
    for x in range(an.g.n):
        part = diam2_partition(an.g, x, an.d)
        forbidden = set(an.pencils[x].lines) | part.family_a3
        if part.family_a2p & forbidden:
            return _fail(x, min(part.family_a2p & forbidden))
        if len(part.family_a2p) < part.A2p.bit_count():
            return _fail(x)
    return _PASS


def _check_near_pencil_deficit(an: _Analysis) -> PropertyResult:
    # Under the fewer-lines-than-vertices hypothesis, the lines from x to
    # its neighbors number strictly fewer than the neighbors.
    for x in range(an.g.n):
        lx1, _, _ = _near_far_pencils(an, x)
        if len(lx1) >= an.g.degree(x):
            return _fail(x)
    return _PASS


def _check_dominant_pairs_exist(an: _Analysis) -> PropertyResult:
    for x in range(an.g.n):
        part = diam2_partition(an.g, x, an.d)
        if part.A2pp == 0:
            return _fail(x)
    return _PASS


def _check_mixed_neighborhood_forces_k122(an: _Analysis) -> PropertyResult:
    iso = None
    for x in range(an.g.n):
        part = diam2_partition(an.g, x, an.d)
        if part.A2pp != an.g.adj[x]:
            if iso is None:
                iso = is_isomorphic(an.g, named_graph("K122"))
            if not iso:
                return _fail(x)
    return _PASS


def check_properties(g: Graph) -> VerificationReport:
    """Evaluate every applicable property for g. Properties gated on class
    membership or diameter are reported as n/a rather than errors."""
    if g.n < 2:
        raise ValueError("property checks need >= 2 vertices")
    an = _Analysis(g)
    lc = is_lc_member(g)
    count = an.system.count
    universal = an.system.universal
    fewer = count < g.n

    props: dict[str, PropertyResult] = {}

    def run(name: str, fn, applicable: bool):
        props[name] = fn(an) if applicable else _NA

    run("same_line_pairs_straddle_apex", _check_same_line_pairs_straddle_apex, lc)
    run("class_extension_neighbor", _check_class_extension_neighbor, lc)
    run("outer_class_pair_lines", _check_outer_class_pair_lines, lc)
    diam3 = lc and an.diam >= 3
    run("diametral_far_lines_distinct", _check_diametral_far_lines_distinct, diam3)
    run("diametral_pencils_disjoint", _check_diametral_pencils_disjoint, diam3)
    diam2 = lc and an.diam == 2
    run("near_far_pencil_split", _check_near_far_pencil_split, diam2)
    run(
        "neighborhood_classes_independent_modules",
        _check_neighborhood_classes_independent_modules,
        diam2,
    )
    run("lines_respect_classes", _check_lines_respect_classes, diam2)
    run("triple_class_line_family", _check_triple_class_line_family, diam2)
    run("split_pair_line_family", _check_split_pair_line_family, diam2)
    deficient = diam2 and fewer
    run("near_pencil_deficit", _check_near_pencil_deficit, deficient)
    run("dominant_pairs_exist", _check_dominant_pairs_exist, deficient)
    run(
        "mixed_neighborhood_forces_k122",
        _check_mixed_neighborhood_forces_k122,
        deficient,
    )
    props["universal_or_enough_lines"] = (
        (_PASS if (universal or count >= g.n) else _fail(count)) if lc else _NA
    )

    return VerificationReport(
        graph6=canonical_graph6(g) if g.n <= 10 else to_graph6(g),
        n=g.n,
        diameter=an.diam,
        line_count=count,
        universal=universal,
        lc=lc,
        chordal=is_chordal(g),
        biconnected=is_biconnected(g),
        properties=props,
    )


def run_property_sweep(stream, jobs: int = 1) -> list[VerificationReport]:
    """check_properties over a stream; reports sorted by graph id so the
    output is identical for any worker count."""
    graphs = list(stream)
    if jobs and jobs > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(check_properties, graphs, chunksize=16))
    else:
        reports = [check_properties(g) for g in graphs]
    return sorted(reports, key=lambda r: (r.n, r.graph6))


# ---------------------------------------------------------------------------
# Sweep-level verdicts

@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of scanning a stream for locally connected graphs with fewer
    lines than vertices."""

    scanned: int
    lc_members: int
    exceptions: tuple[str, ...]  # canonical graph6, sorted
    expected: tuple[str, ...]
    matched: bool

    def to_json_dict(self) -> dict:
        return {
            "scanned": self.scanned,
            "lc_members": self.lc_members,
            "exceptions": list(self.exceptions),
            "expected": list(self.expected),
            "matched": self.matched,
        }


def verify_theorem_main(stream) -> TheoremVerdict:
    """Collect connected locally connected graphs with fewer distinct lines
    than vertices and compare them, by canonical form, against the known
    exceptional multipartite graphs of the scanned sizes."""
    scanned = 0
    lc_count = 0
    sizes: set[int] = set()
    exceptions: set[str] = set()
    for g in stream:
        scanned += 1
        if not is_lc_member(g):
            continue
        lc_count += 1
        sizes.add(g.n)
        if line_system(g).count < g.n:
            exceptions.add(canonical_graph6(g))
    expected = tuple(
        sorted(
            _named_canonical_graph6(name)
            for name in EXPECTED_EXCEPTIONS
            if named_graph(name).n in sizes
        )
    )
    exc = tuple(sorted(exceptions))
    return TheoremVerdict(scanned, lc_count, exc, expected, set(exc) == set(expected))


@dataclass(frozen=True)
class SweepReport:
    """Generic violation report for one-sided sweeps."""

    scanned: int
    applicable: int
    violations: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "scanned": self.scanned,
            "applicable": self.applicable,
            "violations": list(self.violations),
            "ok": self.ok,
        }


def verify_prop_diam3(stream) -> SweepReport:
    """Every connected locally connected graph of diameter >= 3 in the
    stream must have at least as many lines as vertices."""
    scanned = applicable = 0
    violations = []
    for g in stream:
        scanned += 1
        if not is_lc_member(g):
            continue
        d = apsp(g)
        if diameter(d) < 3:
            continue
        applicable += 1
        count = line_system(g, d).count
        if count < g.n:
            violations.append(
                {"graph6": canonical_graph6(g), "n": g.n, "lines": count}
            )
    violations.sort(key=lambda v: (v["n"], v["graph6"]))
    return SweepReport(scanned, applicable, tuple(violations))


def verify_claims(stream, jobs: int = 1) -> tuple[list[VerificationReport], SweepReport]:
    """Full property suite over a stream; the report counts graphs with at
    least one failing property."""
    reports = run_property_sweep(stream, jobs=jobs)
    violations = []
    applicable = 0
    for r in reports:
        if any(res.status != "na" for res in r.properties.values()):
            applicable += 1
        for name, witness in r.failures:
            violations.append(
                {
                    "graph6": r.graph6,
                    "n": r.n,
                    "property": name,
                    "witness": list(witness or ()),
                }
            )
    return reports, SweepReport(len(reports), applicable, tuple(violations))


def verify_theorem_class_examples() -> SweepReport:
    """The six listed multipartite-flavored graphs all have
    lines + bridges < n."""
    rows = []
    violations = []
    for name in ("K22", "K23", "K122_prime", "K122", "K222", "K2222"):
        g = named_graph(name)
        count = line_system(g).count
        nbridges = len(bridges(g))
        ok = count + nbridges < g.n
        rows.append(
            {
                "name": name,
                "n": g.n,
                "lines": count,
                "bridges": nbridges,
                "ok": ok,
            }
        )
        if not ok:
            violations.append(rows[-1])
    return SweepReport(len(rows), len(rows), tuple(violations))


# (name, expected diameter or None, line-count check)
_FAMILY_EXPECTATIONS = (
    ("H6", 2, ("==", 4)),
    ("H8", 2, ("==", 7)),
    ("H6_prime", 3, ("==", 4)),
    ("H8_prime", 3, ("==", 7)),
    ("H8_doubleprime", 3, ("==", 7)),
    ("H5_house", None, ("<", 5)),
    ("H10", 2, ("==", 11)),
)


def verify_conclusion_families() -> SweepReport:
    """Exact line counts and diameters of the matched-clique families and
    the house; the k=5 matched cliques must be back above the vertex count
    (C(5,2)+1 = 11 >= 10)."""
    rows = []
    violations = []
    for name, want_diam, (op, bound) in _FAMILY_EXPECTATIONS:
        g = matched_cliques(5) if name == "H10" else named_graph(name)
        d = apsp(g)
        diam = diameter(d)
        count = line_system(g, d).count
        ok = True
        if want_diam is not None and diam != want_diam:
            ok = False
        if op == "==":
            ok = ok and count == bound
        elif op == "<":
            ok = ok and count < bound
        else:
            ok = ok and count >= bound
        rows.append(
            {"name": name, "n": g.n, "diameter": diam, "lines": count, "ok": ok}
        )
        if not ok:
            violations.append(rows[-1])
    return SweepReport(len(rows), len(rows), tuple(violations))
