"""Command-line surface: graph format conversion, canonization, isomorphism
testing, non-isomorphic generation, canonical dedup, and the two Ramsey
pipelines.  Line-oriented graph6 throughout for pipe composability."""

from __future__ import annotations

import argparse
import json
import sys

from . import generate, ramsey, sat
from .canon import canonical_form, canonize, isomorphic
from .graph import (
    ADJ_LIST,
    ADJ_MATRIX,
    EDGE_LIST,
    GRAPH6_ATOM,
    Graph,
    GraphError,
    graph_convert,
)
from .graph6 import decode_graph6, encode_graph6

FMT_NAMES = {
    "graph6": GRAPH6_ATOM,
    "adj-matrix": ADJ_MATRIX,
    "adj-list": ADJ_LIST,
    "edge-list": EDGE_LIST,
}


def _read_graph_texts(stream, fmt: str, n: int):
    """Parse stdin into per-graph values.  graph6: one atom per line;
    adj-matrix: n rows of 0/1 characters per graph (blank lines separate);
    adj-list / edge-list: one JSON value per line."""
    lines = [ln.strip() for ln in stream]
    if fmt == GRAPH6_ATOM:
        return [ln for ln in lines if ln]
    if fmt == ADJ_MATRIX:
        rows = [ln for ln in lines if ln]
        if len(rows) % max(n, 1) != 0:
            raise GraphError(f"expected groups of {n} matrix rows")
        values = []
        for i in range(0, len(rows), n):
            values.append([[int(ch) for ch in row.replace(" ", "")]
                           for row in rows[i:i + n]])
        return values
    return [json.loads(ln) for ln in lines if ln]


def _write_graph_value(out, fmt: str, value) -> None:
    if fmt == GRAPH6_ATOM:
        out.write(value + "\n")
    elif fmt == ADJ_MATRIX:
        for row in value:
            out.write("".join(str(int(x)) for x in row) + "\n")
        out.write("\n")
    else:
        out.write(json.dumps([list(e) for e in value]) + "\n")


def _cmd_convert(args) -> int:
    src = FMT_NAMES[args.from_fmt]
    dst = FMT_NAMES[args.to_fmt]
    for value in _read_graph_texts(sys.stdin, src, args.n):
        _write_graph_value(sys.stdout, dst,
                           graph_convert(args.n, src, dst, value))
    return 0


def _cmd_canon(args) -> int:
    fmt = FMT_NAMES[args.fmt]
    for value in _read_graph_texts(sys.stdin, fmt, args.n):
        matrix = graph_convert(args.n, fmt, ADJ_MATRIX, value)
        result = canonize(Graph.from_matrix(matrix))
        out = graph_convert(args.n, ADJ_MATRIX, fmt,
                            result.canonic.to_matrix())
        if args.perm:
            perm = " ".join(str(i) for i in result.permutation.one_based())
            if fmt == GRAPH6_ATOM:
                sys.stdout.write(f"{out}\t{perm}\n")
            else:
                sys.stdout.write(f"perm {perm}\n")
                _write_graph_value(sys.stdout, fmt, out)
        else:
            _write_graph_value(sys.stdout, fmt, out)
    return 0


def _cmd_iso(args) -> int:
    g1 = decode_graph6(args.graph1)
    g2 = decode_graph6(args.graph2)
    if g1.n != args.n or g2.n != args.n:
        raise GraphError("graph size does not match --n")
    found = isomorphic(args.n, g1, g2)
    if found is None:
        return 1
    p, _ = found
    print(" ".join(str(i) for i in p.one_based()))
    return 0


def _cmd_geng(args) -> int:
    for g in generate.all_nonisomorphic(args.n):
        print(encode_graph6(g))
    return 0


def _cmd_shortg(args) -> int:
    graphs = [decode_graph6(ln.strip()) for ln in sys.stdin if ln.strip()]
    for g in generate.dedup_canonical(graphs):
        print(encode_graph6(g))
    return 0


def _cmd_ramsey(args) -> int:
    inst = ramsey.RamseyInstance(args.s, args.t, args.n)
    if args.mode == "cnf":
        _, formula = ramsey.encode_ramsey(inst)
        sys.stdout.write(sat.to_dimacs(formula))
        return 0
    if args.stats:
        if args.mode == "gt":
            steps = ramsey.gen_ramsey_gt_trace(inst)
        else:
            steps = (ramsey.gen_ramsey_cg_trace(
                ramsey.RamseyInstance(args.s, args.t, k))
                for k in range(1, args.n + 1))
        for step in steps:
            print(f"{step.n}\t{len(step.graphs)}\t"
                  f"{step.total_seconds:.2f}\t{step.canon_seconds:.2f}")
        return 0
    if args.mode == "gt":
        graphs = ramsey.gen_ramsey_gt(inst)
    else:
        graphs = ramsey.gen_ramsey_cg(inst)
    for g in graphs:
        print(encode_graph6(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcanon",
        description="graph canonization, isomorph-free generation, and "
                    "Ramsey coloring search")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("convert", help="per-line graph format conversion")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--from", dest="from_fmt", choices=FMT_NAMES, required=True)
    p.add_argument("--to", dest="to_fmt", choices=FMT_NAMES, required=True)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("canon", help="per-line canonical form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--fmt", choices=FMT_NAMES, default="graph6")
    p.add_argument("--perm", action="store_true",
                   help="also print the 1-based relabeling permutation")
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("iso", help="isomorphism test on two graph6 atoms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("geng", help="all non-isomorphic graphs on N vertices")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_geng)

    p = sub.add_parser("shortg", help="remove isomorphic duplicates")
    p.set_defaults(func=_cmd_shortg)

    p = sub.add_parser("ramsey", help="Ramsey coloring pipelines")
    p.add_argument("mode", choices=["gt", "cg", "cnf"])
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--stats", action="store_true",
                   help="print per-n count and timing rows instead of graphs")
    p.set_defaults(func=_cmd_ramsey)
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, sat.SatError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
