"""Command-line interface.

Exit status: 0 on success, 1 when a verification or theorem check comes out
negative, 2 on bad input (unparseable files, unknown vertices, refused
searches). Results go to stdout as JSON; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import construct, graph, sparing, theorems
from .graph import Graph, GraphError, format_edge_list
from .labeling import LabelingError, SetLabeling, classify, read_labeling

SCHEMES = ("bipartite", "complete", "odd-cycle", "independent-set", "k-uniform")
EXPECTATIONS = ("iasi", "weak", "strong", "k-uniform")
METHODS = ("auto", "closed-form", "exhaustive", "branch-and-bound")


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _load_graph(args) -> Graph:
    if args.graph and args.gen:
        raise InputError("give only one of --graph and --gen")
    if args.graph:
        try:
            return graph.read_edge_list(args.graph)
        except OSError as exc:
            raise InputError(f"cannot read graph file {args.graph}: {exc.strerror}") from exc
        except GraphError as exc:
            raise InputError(f"{args.graph}: {exc}") from exc
    if args.gen:
        return graph.generate(args.gen)
    raise InputError("a graph is required: use --graph <path> or --gen <family:params>")


def _load_labeling(args, g: Graph) -> SetLabeling:
    if not args.labeling:
        raise InputError("--labeling <path> is required")
    try:
        f = read_labeling(args.labeling)
    except OSError as exc:
        raise InputError(f"cannot read labeling file {args.labeling}: {exc.strerror}") from exc
    except LabelingError as exc:
        raise InputError(f"{args.labeling}: {exc}") from exc
    missing = [v for v in g.vertices if v not in f]
    if missing:
        raise InputError(f"{args.labeling}: vertex {missing[0]!r} has no label")
    unknown = [v for v in f if v not in g]
    if unknown:
        raise InputError(f"{args.labeling}: labels unknown vertex {unknown[0]!r}")
    return f


def _emit_graph(g: Graph, as_json: bool) -> None:
    if as_json:
        print(_dump(g.to_dict()))
    else:
        sys.stdout.write(format_edge_list(g))


def cmd_gen(args) -> int:
    if not args.gen:
        raise InputError("gen needs --gen <family:params>")
    _emit_graph(graph.generate(args.gen), args.json)
    return 0


def cmd_classify(args) -> int:
    g = _load_graph(args)
    report = classify(g, _load_labeling(args, g))
    print(_dump(report.to_dict()))
    return 0


def _violation(report, expect: str, k: int | None) -> str:
    if report.vertex_collision:
        u, v = report.vertex_collision
        return f"vertices {u} and {v} share a label"
    if report.edge_collision:
        (a, b), (c, d) = report.edge_collision
        return f"edges {a}-{b} and {c}-{d} have the same induced label"
    if expect == "weak" and report.weak_violation:
        u, v = report.weak_violation
        return f"edge {u}-{v} is not weak: |g(uv)|={report.edge_index_numbers[(u, v)]} exceeds the larger endpoint label"
    if expect == "strong" and report.strong_violation:
        u, v = report.strong_violation
        return f"edge {u}-{v} is not strong: |g(uv)|={report.edge_index_numbers[(u, v)]} is below the product"
    if expect == "k-uniform":
        sizes = sorted(set(report.edge_index_numbers.values()))
        return f"edge index numbers are {sizes}, not uniformly {k if k is not None else 'equal'}"
    return "labeling does not satisfy the expectation"


def cmd_verify(args) -> int:
    g = _load_graph(args)
    report = classify(g, _load_labeling(args, g))
    ok = report.satisfies(args.expect, args.k)
    print(_dump({"expect": args.expect, "k": args.k, "ok": ok, **report.to_dict()}))
    if not ok:
        print(f"verify: {args.expect} failed: {_violation(report, args.expect, args.k)}", file=sys.stderr)
        return 1
    return 0


def cmd_construct(args) -> int:
    g = _load_graph(args)
    scheme = args.scheme
    if scheme == "bipartite":
        f = construct.weak_bipartite(g)
    elif scheme == "complete":
        f = construct.weak_complete_on(g)
    elif scheme == "odd-cycle":
        f = construct.weak_odd_cycle_on(g)
    elif scheme == "independent-set":
        if args.independent_set is None:
            raise InputError("scheme independent-set needs --independent-set v1,v2,...")
        chosen = [v for v in args.independent_set.split(",") if v]
        f = construct.weak_from_independent_set(g, chosen)
    else:
        if args.k is None:
            raise InputError("scheme k-uniform needs --k <int>")
        f = construct.weakly_k_uniform_bipartite(g, args.k)
    text = f.to_json(g.vertices)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    return 0


def cmd_sparing(args) -> int:
    g = _load_graph(args)
    method = args.method.replace("-", "_")
    try:
        result = sparing.sparing_number(g, method)
    except sparing.SearchLimitExceeded as exc:
        if exc.incumbent is not None:
            value, witness = exc.incumbent
            print(_dump({"incumbent_value": value, "incumbent_witness_set": g.sort_vertices(witness)}),
                  file=sys.stderr)
        raise InputError(str(exc)) from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.labeling_out:
        with open(args.labeling_out, "w", encoding="utf-8") as fh:
            fh.write(result.witness_labeling.to_json(g.vertices) + "\n")
    print(_dump(result.to_dict(g)))
    return 0


def cmd_contract(args) -> int:
    g = _load_graph(args)
    u, v = args.edge
    if not args.labeling:
        _emit_graph(graph.contract_edge(g, (u, v)), args.json)
        return 0
    f = _load_labeling(args, g)
    h, f2 = theorems.contract_labeled(g, f, (u, v))
    print(_dump({"graph": h.to_dict(), "labeling": json.loads(f2.to_json(h.vertices)),
                 "is_weak": classify(h, f2).is_weak}))
    return 0


def cmd_reduce(args) -> int:
    g = _load_graph(args)
    _emit_graph(graph.topological_reduce(g, args.vertex), args.json)
    return 0


def format_table(rows: list[dict]) -> str:
    cols = list(rows[0]) if rows else []
    cells = [[str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


def cmd_check_theorems(args) -> int:
    families = theorems.FAMILIES if args.family == "all" else (args.family,)
    results = {fam: theorems.check_family(fam, args.max, args.seed) for fam in families}
    ok = all(row["match"] for rows in results.values() for row in rows)
    if args.json:
        print(_dump({"ok": ok, "families": results}))
    else:
        for fam, rows in results.items():
            print(f"# {fam}")
            print(format_table(rows))
            print()
        print("all checks passed" if ok else "MISMATCH found")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weakiasi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_opts(p):
        p.add_argument("--graph", help="edge-list file")
        p.add_argument("--gen", help="generated graph, e.g. cycle:7 or complete_bipartite:2:3")

    p = sub.add_parser("gen", help="print a family graph as an edge list")
    p.add_argument("--gen", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("classify", help="report every labeling property")
    graph_opts(p)
    p.add_argument("--labeling")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check a labeling against an expectation")
    graph_opts(p)
    p.add_argument("--labeling")
    p.add_argument("--expect", choices=EXPECTATIONS, default="iasi")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a weak or weakly k-uniform labeling")
    graph_opts(p)
    p.add_argument("--scheme", choices=SCHEMES, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--independent-set", help="comma-separated vertices carrying pair labels")
    p.add_argument("--out", help="also write the labeling JSON here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("sparing", help="compute the sparing number with a witness")
    graph_opts(p)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--labeling-out", help="write the witness labeling JSON here")
    p.set_defaults(func=cmd_sparing)

    p = sub.add_parser("contract", help="contract an edge")
    graph_opts(p)
    p.add_argument("--edge", nargs=2, metavar=("U", "V"), required=True)
    p.add_argument("--labeling", help="carry this labeling across, merged vertex gets the edge label")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("reduce", help="elementary topological reduction at a degree-2 vertex")
    graph_opts(p)
    p.add_argument("--vertex", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("check-theorems", help="tabulate closed forms against exhaustive search")
    p.add_argument("--family", choices=theorems.FAMILIES + ("all",), default="all")
    p.add_argument("--max", type=int, help="largest n (or largest element for lemma-bounds)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_theorems)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
