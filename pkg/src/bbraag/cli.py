"""Command-line front end.

Commands: classify, report, homology, structure, scan.  Output is text or
JSON (``--format json``); JSON goes to the data stream only, diagnostics go
to stderr.  Exit codes: 0 success, 1 usage, 2 parse error, 3 domain error,
4 capacity exceeded, 5 scan found failing graphs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .enumeration import CAPACITY, PREDICATES, scan_property
from .errors import CapacityError, DomainError, GraphParseError, NotSupportedError
from .formats import FORMATS, format_graph6, parse_graph
from .graphs import Graph
from .homology import collapse_to_point, flag_complex, reduced_homology
from .invariants import bb_structure_graph, finitely_presented_group, invariant_report
from .recognition import is_chordal, is_droms, is_ptolemaic, is_tree_of_droms

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_CAPACITY = 4
EXIT_SCAN_FAILURES = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_input_args(p: _Parser):
    p.add_argument("--input", metavar="PATH", help="read the graph from a file")
    p.add_argument("--graph6", metavar="STR", help="inline graph6 string")
    p.add_argument(
        "--input-format", choices=FORMATS, default="auto",
        help="format of --input (default: auto)",
    )


def _add_output_args(p: _Parser):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", metavar="PATH", help="write the report to a file")


def _add_ring_args(p: _Parser):
    p.add_argument(
        "--ring", action="append", metavar="RING",
        help="coefficient ring Z, Q, or Fp:<p>; repeatable (default: Z and Q)",
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="bbraag", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="graph-class verdicts with certificates/witnesses")
    _add_input_args(p)
    _add_output_args(p)

    p = sub.add_parser("report", help="full invariant report")
    _add_input_args(p)
    _add_output_args(p)
    _add_ring_args(p)
    p.add_argument(
        "--max-degree", type=int, default=12, metavar="N",
        help="Hilbert-series truncation degree, N >= 2 (default 12)",
    )

    p = sub.add_parser("homology", help="reduced flag-complex homology per ring")
    _add_input_args(p)
    _add_output_args(p)
    _add_ring_args(p)

    p = sub.add_parser("structure", help="defining graph of the Bestvina-Brady object")
    _add_input_args(p)
    _add_output_args(p)

    p = sub.add_parser("scan", help="enumeration scan over all small connected graphs")
    p.add_argument("predicate", choices=sorted(PREDICATES))
    p.add_argument("--max-v", type=int, default=8, metavar="N")
    p.add_argument("--ring", default="Z", metavar="RING")
    p.add_argument("--workers", type=int, default=1, metavar="K")
    p.add_argument("--capacity", type=int, default=CAPACITY, metavar="N",
                   help=f"hard vertex bound for scans (default {CAPACITY})")
    _add_output_args(p)
    return parser


def _load_graph(args) -> Graph:
    if bool(args.input) == bool(args.graph6):
        raise SystemExit(_usage("exactly one of --input or --graph6 is required"))
    if args.graph6 is not None:
        return parse_graph(args.graph6, "graph6")
    with open(args.input, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read(), args.input_format)


def _usage(message: str) -> int:
    print(f"bbraag: error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        data = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        data = text if text.endswith("\n") else text + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data)


def _witness_text(witness) -> str:
    if witness is None:
        return ""
    if not witness.vertices:
        return f"witness {witness.pattern}"
    return f"witness {witness.pattern} on {','.join(witness.vertices)}"


def _graph_json(g: Graph) -> dict:
    return {
        "vertices": list(g.labels),
        "edges": [list(e) for e in g.edges()],
        "graph6": format_graph6(g),
    }


def cmd_classify(args) -> int:
    g = _load_graph(args)
    chordal = is_chordal(g)
    droms = is_droms(g)
    ptolemaic = is_ptolemaic(g)
    tod = is_tree_of_droms(g)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "classify",
        "graph": _graph_json(g),
        "chordal": {
            "verdict": chordal.chordal,
            "elimination_order": list(chordal.elimination_order or ()) or None,
            "witness": chordal.witness.to_json() if chordal.witness else None,
        },
        "droms": {
            "verdict": droms.droms,
            "certificate": droms.certificate.to_json() if droms.certificate else None,
            "witness": droms.witness.to_json() if droms.witness else None,
        },
        "ptolemaic": {
            "verdict": ptolemaic.ptolemaic,
            "certificate": ptolemaic.certificate.to_json() if ptolemaic.certificate else None,
            "witness": ptolemaic.witness.to_json() if ptolemaic.witness else None,
        },
        "tree_of_droms": {
            "verdict": tod.tree_of_droms,
            "decomposition": tod.decomposition.to_json() if tod.decomposition else None,
            "witness": tod.witness.to_json() if tod.witness else None,
        },
    }
    lines = [
        f"graph: {g.n} vertices, {g.edge_count} edges, graph6 {format_graph6(g)}",
        f"chordal:       {'yes' if chordal.chordal else 'no  ' + _witness_text(chordal.witness)}",
        f"droms:         {'yes' if droms.droms else 'no  ' + _witness_text(droms.witness)}",
        f"ptolemaic:     {'yes' if ptolemaic.ptolemaic else 'no  ' + _witness_text(ptolemaic.witness)}",
        f"tree_of_droms: {'yes' if tod.tree_of_droms else 'no  ' + _witness_text(tod.witness)}",
    ]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _rings_of(args) -> tuple[str, ...]:
    return tuple(args.ring) if args.ring else ("Z", "Q")


def cmd_report(args) -> int:
    g = _load_graph(args)
    if args.max_degree < 2:
        raise DomainError("--max-degree must be at least 2")
    report = invariant_report(g, rings=_rings_of(args), degree_bound=args.max_degree)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "report",
        "report": report.to_json(),
    }
    r = report
    lines = [
        f"graph: {r.v} vertices, {r.e} edges, graph6 {r.graph6}",
        f"connected: {r.connected}   flag dim: {r.flag_dim}   clique number (cd of RAAG object): {r.cd_raag}",
        f"betti of RAAG object: b1={r.b1_raag} b2={r.b2_raag}   omega={r.omega_raag}",
        "b1 of BB object: " + (str(r.b1_bb) if r.b1_bb is not None else "not finitely generated"),
    ]
    for ring in r.rings:
        fp = "infinity" if ring.fp_type is None else str(ring.fp_type)
        lines.append(
            f"[{ring.ring}] fp_type={fp} b2_bb={ring.b2_bb} omega_bb={ring.omega_bb} "
            f"finitely_presented_lie={ring.finitely_presented_lie}"
        )
    lines.append(f"coherent: {r.coherent.coherent}")
    lines.append(f"bb_free: {r.bb_free.free} (rank {r.bb_free.rank}; {r.bb_free.reason})")
    if r.bb_abelian is not None:
        lines.append(f"bb_abelian: {r.bb_abelian.abelian} (rank {r.bb_abelian.rank})")
    if r.subgroups_raag is not None:
        lines.append(f"all subgroups RAAG: {r.subgroups_raag.holds}")
    lines.append(f"finitely presented group: {r.finitely_presented_group}")
    if r.structure is not None:
        lines.append(
            f"structure graph: {len(r.structure.graph.labels)} vertices, "
            f"graph6 {format_graph6(r.structure.graph)}"
        )
    else:
        lines.append(f"structure graph: unavailable ({r.structure_error})")
    oi = r.omega_identity
    if oi.applicable:
        lines.append(f"omega identity: {oi.lhs} = {oi.rhs} -> {'pass' if oi.passed else 'FAIL'}")
    else:
        lines.append(f"omega identity: inapplicable ({oi.reason})")
    for name, ineq in sorted(r.inequalities.items()):
        if ineq.applicable:
            status = "pass" if ineq.passed else "FAIL"
            lines.append(f"{name}: {ineq.lhs} >= {ineq.rhs} -> {status}")
        else:
            lines.append(f"{name}: skipped ({ineq.reason})")
    if r.hilbert is not None and r.hilbert.applicable:
        lines.append(
            f"hilbert consistency to degree {r.hilbert.degree_bound}: "
            f"{'pass' if r.hilbert.passed else 'FAIL'}"
        )
    elif r.hilbert is not None:
        lines.append(f"hilbert consistency: inapplicable ({r.hilbert.reason})")
    if r.cohomology is not None:
        lines.append(f"cohomology dims over {r.cohomology.ring}: {list(r.cohomology.dims)}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_homology(args) -> int:
    g = _load_graph(args)
    c = flag_complex(g)
    rings = _rings_of(args)
    collapse = collapse_to_point(c)
    hom = {ring: reduced_homology(c, ring) for ring in rings}
    simply = finitely_presented_group(g)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "homology",
        "graph": _graph_json(g),
        "flag_complex": {
            "dim": c.dim,
            "face_counts": [c.face_count(d) for d in range(c.dim + 1)],
        },
        "homology": [hom[ring].to_json() for ring in rings],
        "acyclic": {ring: hom[ring].trivial() for ring in rings},
        "collapse": collapse.to_json(),
        "simply_connected": simply,
    }
    lines = [
        f"graph: {g.n} vertices, {g.edge_count} edges, graph6 {format_graph6(g)}",
        f"flag complex: dim {c.dim}, faces {[c.face_count(d) for d in range(c.dim + 1)]}",
    ]
    for ring in rings:
        groups = hom[ring].groups
        desc = ", ".join(
            f"H~{i}: rank {r}" + (f" torsion {list(t)}" if t else "")
            for i, (r, t) in enumerate(groups)
        )
        lines.append(f"[{ring}] {desc or 'empty complex'}   acyclic: {hom[ring].trivial()}")
    lines.append(f"collapsible: {collapse.collapsible}")
    lines.append(f"simply connected (flag complex): {simply}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_structure(args) -> int:
    g = _load_graph(args)
    structure = bb_structure_graph(g)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "structure",
        "graph": _graph_json(g),
        "structure": structure.to_json(),
    }
    sg = structure.graph
    lines = [
        f"graph: {g.n} vertices, {g.edge_count} edges, graph6 {format_graph6(g)}",
        f"Bestvina-Brady object is the RAAG on: {sg.n} vertices, "
        f"{sg.edge_count} edges, graph6 {format_graph6(sg)}",
        "vertices: " + (", ".join(sg.labels) if sg.n else "(none)"),
    ]
    lines.extend(f"edge: {a} {b}" for a, b in sg.edges())
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_scan(args) -> int:
    report = scan_property(
        args.predicate, args.max_v, ring=args.ring,
        capacity=args.capacity, workers=args.workers,
    )
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "scan",
        "scan": report.to_json(),
    }
    _emit(args, payload, report.to_text())
    return EXIT_OK if report.failed == 0 else EXIT_SCAN_FAILURES


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "classify": cmd_classify,
        "report": cmd_report,
        "homology": cmd_homology,
        "structure": cmd_structure,
        "scan": cmd_scan,
    }
    try:
        return handlers[args.command](args)
    except SystemExit:
        raise
    except GraphParseError as exc:
        print(f"bbraag: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"bbraag: i/o error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityError as exc:
        print(f"bbraag: capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (DomainError, NotSupportedError) as exc:
        print(f"bbraag: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
