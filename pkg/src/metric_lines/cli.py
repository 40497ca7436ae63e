"""Command-line front end: generation, single-graph analysis, enumeration,
and the verification suites. Batch and non-interactive.

Exit codes: 0 = success / expectations met, 1 = mathematical finding
(violation, unexpected exception, disconnected input), 2 = usage or parse
error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from .graph import (
    DisconnectedError,
    Graph,
    GraphFormatError,
    bits,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    matched_cliques,
    named_graph,
    parse_adjacency_text,
    parse_graph6,
    path_graph,
    to_graph6,
    NAMED_GRAPHS,
)
from .metric import apsp, diameter
from .lines import line_system
from .classes import bridges, is_biconnected, is_chordal, is_lc_member, is_connected
from . import verify as V

SCHEMA = V.SCHEMA
SUITES = ("main-theorem", "diam3", "claims", "families", "theorem-class")
PREDICATES = ("lc", "chordal", "biconnected", "bridges", "diameter")

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class Finding(Exception):
    pass


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", metavar="STR", help="inline graph6 record")
    p.add_argument("--file", metavar="PATH", help="graph6 or adjacency-text file")
    p.add_argument(
        "--family",
        metavar="NAME",
        help="named graph (%s), Cn/Pn/Kn, matched, or multipartite"
        % ", ".join(NAMED_GRAPHS),
    )
    p.add_argument("--k", type=int, help="clique size for --family matched")
    p.add_argument("--parts", metavar="a,b,c", help="part sizes for --family multipartite")


def _resolve_family(name: str, k: int | None, parts: str | None) -> Graph:
    if name == "matched":
        if k is None:
            raise UsageError("--family matched needs --k")
        return matched_cliques(k)
    if name == "multipartite":
        if not parts:
            raise UsageError("--family multipartite needs --parts a,b,c")
        try:
            sizes = [int(t) for t in parts.split(",")]
        except ValueError as exc:
            raise UsageError(f"bad --parts {parts!r}") from exc
        return complete_multipartite(sizes)
    try:
        return named_graph(name)
    except ValueError:
        pass
    m = re.fullmatch(r"([CPK])(\d+)", name, flags=re.IGNORECASE)
    if m:
        kind, num = m.group(1).upper(), int(m.group(2))
        if kind == "C":
            return cycle_graph(num)
        if kind == "P":
            return path_graph(num)
        return complete_graph(num)
    raise UsageError(
        f"unknown family {name!r}; use a named graph ({', '.join(NAMED_GRAPHS)}), "
        "Cn/Pn/Kn, matched, or multipartite"
    )


def _load_input(args) -> Graph:
    sources = [s for s in ("graph6", "file", "family") if getattr(args, s, None)]
    if len(sources) != 1:
        raise UsageError("exactly one of --graph6/--file/--family is required")
    if args.graph6:
        return parse_graph6(args.graph6)
    if args.file:
        text = Path(args.file).read_text(encoding="ascii")
        stripped = text.strip()
        first = stripped.splitlines()[0].strip() if stripped else ""
        if first and (first.split()[0].rstrip(";").isdigit()):
            return parse_adjacency_text(text)
        return parse_graph6(first)
    return _resolve_family(args.family, args.k, args.parts)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        out = json.dumps({"schema": SCHEMA, **payload}, sort_keys=True)
        print(out)
    else:
        for line in text_lines:
            print(line)


def _write_jsonl(path: str, records) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for rec in records:
            fh.write(json.dumps({"schema": SCHEMA, **rec}, sort_keys=True) + "\n")


def cmd_lines(args) -> int:
    g = _load_input(args)
    if g.n < 2:
        raise Finding("need >= 2 vertices")
    ls = line_system(g)
    payload = ls.to_json_dict()
    text = [f"n={g.n} count={ls.count} universal={str(ls.universal).lower()}"]
    for mask in ls.lines:
        members = " ".join(str(v) for v in bits(mask))
        text.append(f"line: {members}")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_check(args) -> int:
    g = _load_input(args)
    preds = [t.strip() for t in args.pred.split(",") if t.strip()]
    if not preds:
        raise UsageError("--pred needs at least one predicate")
    for t in preds:
        if t not in PREDICATES:
            raise UsageError(f"unknown predicate {t!r}; known: {', '.join(PREDICATES)}")
    values: dict[str, object] = {}
    for t in preds:
        if t == "lc":
            values[t] = is_lc_member(g)
        elif t == "chordal":
            values[t] = is_chordal(g)
        elif t == "biconnected":
            values[t] = is_biconnected(g)
        elif t == "bridges":
            values[t] = bridges(g)
        else:
            if not is_connected(g):
                raise Finding("disconnected: diameter undefined")
            values[t] = diameter(apsp(g))

    def fmt(v):
        if isinstance(v, bool):
            return str(v).lower()
        if isinstance(v, list):
            return "[" + ",".join(f"{a}-{b}" for a, b in v) + "]"
        return str(v)

    text = [" ".join(f"{k}={fmt(v)}" for k, v in values.items())]
    payload = {"n": g.n, "predicates": values}
    _emit(args, payload, text)
    return EXIT_OK


def _jobs(args) -> int:
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get("METRIC_LINES_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise UsageError(f"bad METRIC_LINES_JOBS value {env!r}") from exc
    return os.cpu_count() or 1


def _suite_stream(args) -> V.GraphStream:
    if args.file:
        return V.stream_from_graph6_file(args.file)
    if args.n is None:
        raise UsageError("suite needs --n or --file")
    if args.n <= V.ENUMERATION_CAP:
        return V.enumerate_connected(args.n)
    return V.stream_random_lc(args.n, args.p, args.seed, args.samples)


def cmd_verify(args) -> int:
    if args.suite == "main-theorem":
        stream = _suite_stream(args)
        verdict = V.verify_theorem_main(stream)
        if args.out:
            _write_jsonl(args.out, [verdict.to_json_dict()])
        status = "expected" if verdict.matched else "UNEXPECTED"
        text = [
            f"suite=main-theorem stream={stream.describe()}",
            f"scanned={verdict.scanned} lc={verdict.lc_members}",
            f"exceptions: {', '.join(verdict.exceptions) or 'none'} ({status})",
        ]
        _emit(args, {"suite": "main-theorem", **verdict.to_json_dict()}, text)
        return EXIT_OK if verdict.matched else EXIT_FINDING

    if args.suite == "diam3":
        stream = _suite_stream(args)
        report = V.verify_prop_diam3(stream)
        if args.out:
            _write_jsonl(args.out, report.violations)
        text = [
            f"suite=diam3 stream={stream.describe()}",
            f"scanned={report.scanned} applicable={report.applicable} "
            f"violations={len(report.violations)}",
        ]
        if report.violations:
            text.append(f"first violation: {report.violations[0]}")
        _emit(args, {"suite": "diam3", **report.to_json_dict()}, text)
        return EXIT_OK if report.ok else EXIT_FINDING

    if args.suite == "claims":
        stream = _suite_stream(args)
        reports, sweep = V.verify_claims(stream, jobs=_jobs(args))
        if args.out:
            _write_jsonl(args.out, (r.to_json_dict() for r in reports))
        text = [
            f"suite=claims stream={stream.describe()}",
            f"scanned={sweep.scanned} applicable={sweep.applicable} "
            f"witnesses={len(sweep.violations)}",
        ]
        if sweep.violations:
            text.append(f"first witness: {sweep.violations[0]}")
        _emit(args, {"suite": "claims", **sweep.to_json_dict()}, text)
        return EXIT_OK if sweep.ok else EXIT_FINDING

    if args.suite == "families":
        report = V.verify_conclusion_families()
    else:  # theorem-class
        report = V.verify_theorem_class_examples()
    if args.out:
        _write_jsonl(args.out, report.violations)
    text = [
        f"suite={args.suite} checked={report.scanned} "
        f"violations={len(report.violations)}",
    ]
    if report.violations:
        text.append(f"first violation: {report.violations[0]}")
    _emit(args, {"suite": args.suite, **report.to_json_dict()}, text)
    return EXIT_OK if report.ok else EXIT_FINDING


def cmd_enumerate(args) -> int:
    if args.n is None:
        raise UsageError("enumerate needs --n")
    if not 1 <= args.n <= V.ENUMERATION_CAP:
        raise UsageError(
            f"enumerate supports n <= {V.ENUMERATION_CAP}; "
            "supply an external graph6 stream for larger n"
        )
    records = [to_graph6(g) for g in V.enumerate_connected(args.n)]
    if args.out:
        Path(args.out).write_text("".join(r + "\n" for r in records), encoding="ascii")
        print(f"n={args.n} classes={len(records)} -> {args.out}")
    else:
        for r in records:
            print(r)
        print(f"classes={len(records)}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metric-lines",
        description="Lines of graph metric spaces: analysis and verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_lines = sub.add_parser("lines", help="distinct lines of one graph")
    _add_input_flags(p_lines)

    p_check = sub.add_parser("check", help="class predicates of one graph")
    _add_input_flags(p_check)
    p_check.add_argument(
        "--pred",
        default="lc,chordal,biconnected,bridges,diameter",
        help="comma list from: " + ", ".join(PREDICATES),
    )

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, choices=SUITES)
    p_verify.add_argument("--n", type=int, help="exhaustive size (<=7) or sample size")
    p_verify.add_argument("--file", metavar="PATH", help="graph6 stream, one per line")
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--samples", type=int, default=100,
                          help="random sample count when --n > 7")
    p_verify.add_argument("--p", type=float, default=0.7,
                          help="edge probability for random sampling")
    p_verify.add_argument("--jobs", type=int, default=None,
                          help="worker processes (env METRIC_LINES_JOBS)")

    p_enum = sub.add_parser("enumerate", help="connected graphs up to isomorphism")
    p_enum.add_argument("--n", type=int)

    for p in (p_lines, p_check, p_verify, p_enum):
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--out", metavar="PATH", help="write report file")
    return parser


_COMMANDS = {
    "lines": cmd_lines,
    "check": cmd_check,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except (Finding, DisconnectedError, V.NoSamplesError) as exc:
        print(f"finding: {exc}", file=sys.stderr)
        return EXIT_FINDING
    except (UsageError, GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main(argv=sys.argv[1:]))
