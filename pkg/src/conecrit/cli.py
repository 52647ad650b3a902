"""Command-line interface.

Graph files look like::

    # path on four vertices
    graph 4 3 undirected
    0 1
    1 2
    2 3 1

Exit codes: 0 ok, 2 parse error, 3 invalid (non-Eulerian or disconnected)
graph, 4 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cones import (
    CHECK_NAMES,
    ConeReport,
    SplitReport,
    cone1_group,
    full_report,
    run_checks,
    VerificationError,
)
from .graph import Digraph, GraphError, from_arcs, from_undirected, require_eulerian_connected
from .groups import AbelianGroup, critical_group

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_VERIFY = 4


class GraphParseError(ValueError):
    pass


def parse_graph_text(text: str) -> tuple[Digraph, bool]:
    """Return the graph and whether it was declared directed."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((lineno, line.split()))
    if not lines:
        raise GraphParseError("empty graph file")
    lineno, head = lines[0]
    if len(head) != 4 or head[0] != "graph" or head[3] not in ("directed", "undirected"):
        raise GraphParseError("line %d: expected 'graph <k> <m> <directed|undirected>'" % lineno)
    try:
        k, m = int(head[1]), int(head[2])
    except ValueError:
        raise GraphParseError("line %d: k and m must be integers" % lineno) from None
    if k < 1 or m < 0:
        raise GraphParseError("line %d: need k >= 1 and m >= 0" % lineno)
    directed = head[3] == "directed"
    body = lines[1:]
    if len(body) != m:
        raise GraphParseError("header declares %d edges but file has %d edge lines" % (m, len(body)))
    edges = []
    for lineno, fields in body:
        if len(fields) not in (2, 3):
            raise GraphParseError("line %d: expected '<u> <v> [mult]'" % lineno)
        try:
            u, v, *rest = (int(x) for x in fields)
        except ValueError:
            raise GraphParseError("line %d: non-integer field" % lineno) from None
        mult = rest[0] if rest else 1
        if not (0 <= u < k and 0 <= v < k):
            raise GraphParseError("line %d: vertex index outside [0, %d)" % (lineno, k))
        if mult < 1:
            raise GraphParseError("line %d: multiplicity must be >= 1" % lineno)
        edges.append((u, v, mult))
    g = from_arcs(k, edges) if directed else from_undirected(k, edges)
    return g, directed


def read_graph_file(path: str) -> tuple[Digraph, bool]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphParseError("cannot read %s: %s" % (path, exc.strerror)) from None
    return parse_graph_text(text)


def group_json(g: AbelianGroup) -> dict:
    return {"invariant_factors": [str(d) for d in g.torsion], "free_rank": g.free_rank}


def split_json(s: SplitReport) -> dict:
    return {
        "n_plus_k": str(s.n_plus_k),
        "factorization": [[str(p), e] for p, e in s.factorization],
        "cok_valuations": {str(p): list(v) for p, v in s.cok_valuations.items()},
        "witness": {str(p): w for p, w in s.witness.items()},
        "splits": s.splits,
    }


def report_json(r: ConeReport) -> dict:
    return {
        "k": r.k,
        "n": r.n,
        "n_plus_k": str(r.n + r.k),
        "group_direct": group_json(r.group_direct),
        "group_theorem": group_json(r.group_theorem),
        "order_direct": str(r.order_direct),
        "order_formula": str(r.order_formula),
        "all_ones_order": str(r.all_ones_order),
        "h_n": dict(group_json(r.h_n), order=str(r.h_n.order()), structure="realized as cok(A) / <all-ones>"),
        "split": split_json(r.split),
        "checks": dict(r.checks),
        "errors": dict(r.errors),
    }


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def cmd_critgroup(args) -> int:
    g, _ = read_graph_file(args.file)
    require_eulerian_connected(g)
    sink = g.k - 1 if args.sink is None else args.sink
    grp = critical_group(g, sink)
    if args.json:
        print(_dump({
            "command": "critgroup",
            "k": g.k,
            "sink": sink,
            "group": group_json(grp),
            "order": str(grp.order()),
        }))
    else:
        print("%s, order %d" % (grp, grp.order()))
    return EXIT_OK


def _print_report(r: ConeReport) -> None:
    print("cone G_%d over a graph on k=%d vertices (n+k = %d)" % (r.n, r.k, r.n + r.k))
    print("  crit(G_n) direct:   %s" % r.group_direct)
    print("  crit(G_n) theorem:  %s" % r.group_theorem)
    print("  order: %d (formula %d)" % (r.order_direct, r.order_formula))
    print("  all-ones order: %d" % r.all_ones_order)
    print("  H_n: %s, order %d" % (r.h_n, r.h_n.order()))
    print("  splits: %s" % ("yes" if r.split.splits else "no"))
    print("  checks: " + ", ".join("%s %s" % (c, "PASS" if r.checks[c] else "FAIL") for c in CHECK_NAMES))


def _report_failures(reports) -> int:
    status = EXIT_OK
    for r in reports:
        for name in r.failed:
            print("FAILED %s (n=%d): %s" % (name, r.n, r.errors.get(name, "")), file=sys.stderr)
            status = EXIT_VERIFY
    return status


def cmd_cone(args) -> int:
    g, _ = read_graph_file(args.file)
    require_eulerian_connected(g)
    if args.n == 1:
        try:
            grp = cone1_group(g)
        except VerificationError as exc:
            print("FAILED %s: %s" % (exc.claim, exc.detail), file=sys.stderr)
            return EXIT_VERIFY
        if args.json:
            print(_dump({"command": "cone", "k": g.k, "n": 1, "group": group_json(grp),
                         "order": str(grp.order())}))
        else:
            print("%s, order %d" % (grp, grp.order()))
        return EXIT_OK
    r = full_report(g, args.n)
    if args.json:
        print(_dump({"command": "cone", "report": report_json(r)}))
    else:
        _print_report(r)
    return _report_failures([r])


def cmd_scan(args) -> int:
    g, _ = read_graph_file(args.file)
    require_eulerian_connected(g)
    reports = [full_report(g, n) for n in range(args.n_from, args.n_to + 1)]
    n_split = sum(r.split.splits for r in reports)
    summary = {"split": n_split, "non_split": len(reports) - n_split}
    if args.json:
        print(_dump({
            "command": "scan",
            "k": g.k,
            "n_from": args.n_from,
            "n_to": args.n_to,
            "rows": [report_json(r) for r in reports],
            "summary": summary,
        }))
    else:
        print("%4s  %-30s  %-24s  %6s  %s" % ("n", "crit(G_n)", "order", "splits", "checks"))
        for r in reports:
            print("%4d  %-30s  %-24d  %6s  %s" % (
                r.n, r.group_direct, r.order_direct, "yes" if r.split.splits else "no",
                "ok" if r.ok else "FAIL: " + ",".join(r.failed)))
        print("summary: %d split, %d non-split" % (summary["split"], summary["non_split"]))
    return _report_failures(reports)


def cmd_verify(args) -> int:
    g, _ = read_graph_file(args.file)
    require_eulerian_connected(g)
    widths = [max(len(c), 4) for c in CHECK_NAMES]
    print("%4s  " % "n" + "  ".join(c.ljust(w) for c, w in zip(CHECK_NAMES, widths)))
    failures = []
    for n in range(args.n_from, args.n_to + 1):
        checks, errors = run_checks(g, n)
        cells = ("PASS" if checks[c] else "FAIL" for c in CHECK_NAMES)
        print(("%4d  " % n + "  ".join(x.ljust(w) for x, w in zip(cells, widths))).rstrip())
        failures += [(n, c, errors.get(c, "")) for c in CHECK_NAMES if not checks[c]]
    for n, c, why in failures:
        print("FAILED %s (n=%d): %s" % (c, n, why))
    if failures:
        return EXIT_VERIFY
    print("all checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conecrit", description="Critical groups of Eulerian digraphs and their iterated cones."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("critgroup", help="critical group of a graph")
    p.add_argument("file")
    p.add_argument("--sink", type=int, default=None, help="sink vertex (default: last)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_critgroup)

    p = sub.add_parser("cone", help="full report for the n-th iterated cone")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cone)

    for name, func, helptext in (
        ("scan", cmd_scan, "one cone report per n in a range"),
        ("verify", cmd_verify, "PASS/FAIL matrix of all cone checks"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        p.add_argument("--n-from", type=int, default=2)
        p.add_argument("--n-to", type=int, required=True)
        if name == "scan":
            p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "cone" and args.n < 1:
        parser.error("--n must be >= 1")
    if args.command in ("scan", "verify") and not 2 <= args.n_from <= args.n_to:
        parser.error("need 2 <= --n-from <= --n-to")
    try:
        return args.func(args)
    except GraphParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except GraphError as exc:
        print("invalid graph: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    except VerificationError as exc:
        print("FAILED %s: %s" % (exc.claim, exc.detail), file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
