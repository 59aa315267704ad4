"""Command-line frontend: ``akgraph {recognize,ak,edges,gen,extremal}``.

Input graphs come from files given as arguments (``-`` or nothing means
stdin).  A file whose first non-comment line is two integers is read as
one edge list; anything else is read as graph6, one graph per line.
Analyses print one JSON object per input graph, in input order.

JSON shapes
-----------
recognize: ``{"input", "order", "size", "member", "certificate"?, "witness"?, "oracle_agrees"?}``
ak:        ``{"input", "order", "size", "ak": k | "none" | 0, "min_sets"?}``
edges:     ``{"input", "order", "size", "edges": [{"edge": [u, v], "class": ...}]}``
extremal:  ``{"n", "f", "max_found", "extremal_graphs": [graph6...], "matches_paper"}``
errors:    ``{"input", "error": kind, "message"}``; the exit code is then 1.

Certificates serialize as nested objects tagged by ``kind``:
``edge`` (``vertices``), ``cycle`` (``vertices``), ``corona`` (``host``,
``host_edges``, ``pairing``) and ``glue`` (``attach``, ``pendant``,
``left``, ``right``).  Witnesses are ``{"tree", "bad_vertex", "odd_order"}``.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import generators as gen
from .antikekule import AkKind, anti_kekule_number
from .exceptions import BoundExhausted, GraphError, TreeCapExceeded
from .extremal import f, matches_published, max_size_search, single_edge_augmentations
from .graph import labeled_graphs
from .io import encode_graph6, parse_edge_list, parse_graph6
from .kekule import certificate_to_dict, recognize, recognize_oracle, sample_member, sample_pm_tree, witness_to_dict
from .matching import classify_edges

EXHAUSTIVE_MAX_HALF_ORDER = 3


def _looks_like_edge_list(lines):
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            parts = line.split()
            return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
    return False


def read_inputs(paths, fmt="auto"):
    """Yield ``(label, graph_or_exception)`` for every graph in ``paths``."""
    for path in paths or ["-"]:
        if path == "-":
            text, name = sys.stdin.read(), "<stdin>"
        else:
            with open(path) as fh:
                text, name = fh.read(), path
        lines = text.splitlines()
        if fmt == "edgelist" or (fmt == "auto" and _looks_like_edge_list(lines)):
            try:
                yield name, parse_edge_list(text)
            except GraphError as exc:
                yield name, exc
            continue
        for line in lines:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                yield line, parse_graph6(line)
            except GraphError as exc:
                yield line, exc


def _error(label, exc):
    return {"input": label, "error": type(exc).__name__, "message": str(exc)}


def _base(label, g):
    return {"input": label, "order": g.n, "size": g.size}


def _run_recognize(label, g, args):
    rec = recognize(g)
    out = _base(label, g)
    out["member"] = rec.member
    if args.certificate and rec.member:
        out["certificate"] = certificate_to_dict(rec.certificate)
    if args.witness and not rec.member:
        out["witness"] = witness_to_dict(rec.witness)
    if args.oracle:
        out["oracle_agrees"] = recognize_oracle(g, cap=args.tree_cap) == rec.member
    return out


def _run_ak(label, g, args):
    res = anti_kekule_number(g, max_k=args.max_k, all_min_sets=args.all_min_sets)
    out = _base(label, g)
    out["ak"] = res.as_json_value()
    if args.all_min_sets and res.kind is not AkKind.NONE_EXISTS:
        out["min_sets"] = [[list(e) for e in s] for s in res.sets]
    return out


def _run_edges(label, g, args):
    out = _base(label, g)
    out["edges"] = [{"edge": list(e), "class": c.value} for e, c in classify_edges(g).items()]
    return out


def _pretty(obj):
    if "error" in obj:
        return f"{obj['input']}: ERROR {obj['error']}: {obj['message']}"
    head = f"{obj['input']}: order={obj['order']} size={obj['size']}"
    if "member" in obj:
        tail = "member" if obj["member"] else "non-member"
        if "oracle_agrees" in obj:
            tail += f" (oracle {'agrees' if obj['oracle_agrees'] else 'DISAGREES'})"
        return f"{head} {tail}"
    if "ak" in obj:
        return f"{head} ak={obj['ak']}"
    return head + "".join(f"\n  {e['edge']}: {e['class']}" for e in obj["edges"])


def _analyze(args, run):
    failed = False
    for label, g in read_inputs(args.inputs, args.format):
        if isinstance(g, Exception):
            obj, failed = _error(label, g), True
        else:
            try:
                obj = run(label, g, args)
            except (GraphError, BoundExhausted, TreeCapExceeded) as exc:
                obj, failed = _error(label, exc), True
        print(_pretty(obj) if args.pretty else json.dumps(obj, sort_keys=True))
    return 1 if failed else 0


def _cmd_gen(args):
    kind = args.kind
    if kind in ("sample-g", "sample-pm-tree"):
        if args.seed is None or args.half_order is None:
            raise GraphError(f"gen {kind} requires --half-order and --seed")
        sampler = sample_member if kind == "sample-g" else sample_pm_tree
        graphs = [sampler(args.half_order, args.seed + i) for i in range(args.count)]
    elif kind == "compose":
        if not args.host or not args.attach:
            raise GraphError("gen compose requires --host and one --attach per host vertex")
        host = parse_graph6(args.host)
        parts = []
        for item in args.attach:
            g6, _, v = item.rpartition(":")
            if not g6:
                raise GraphError(f"--attach expects GRAPH6:VERTEX, got {item!r}")
            parts.append((parse_graph6(g6), int(v)))
        graphs = [gen.compose(host, parts).graph]
    else:
        if args.n is None:
            raise GraphError(f"gen {kind} requires --n")
        named = {
            "complete": gen.complete_graph,
            "cycle": gen.cycle_graph,
            "path": gen.path_graph,
        }
        if kind == "corona":
            graphs = [gen.corona(named[args.base](args.n))]
        else:
            graphs = [named[kind](args.n)]
    for g in graphs:
        print(encode_graph6(g))
    return 0


def _cmd_extremal(args):
    n = args.half_order
    if args.exhaustive:
        if n > EXHAUSTIVE_MAX_HALF_ORDER:
            raise GraphError(f"--exhaustive supports --half-order <= {EXHAUSTIVE_MAX_HALF_ORDER}")
        graphs = labeled_graphs(2 * n, connected=True)
    else:
        graphs = (g for _, g in read_inputs([args.file]) if not isinstance(g, Exception))
    best, reps = max_size_search(graphs, n)
    bound = f(n)
    out = {
        "n": n,
        "f": bound,
        "max_found": best,
        "extremal_graphs": [encode_graph6(g) for g in reps],
        "bound_respected": best is None or best <= bound,
        "matches_paper": best == bound and matches_published(n, reps),
    }
    if args.augment_check:
        base = gen.corona(gen.complete_graph(n))
        out["augmentations_all_nonmembers"] = not any(
            recognize(h).member for _, h in single_edge_augmentations(base)
        )
    print(json.dumps(out, sort_keys=True, indent=2 if args.pretty else None))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="akgraph", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def inputs(sp):
        sp.add_argument("inputs", nargs="*", help="input files ('-' or none: stdin)")
        sp.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto")
        sp.add_argument("--pretty", action="store_true", help="human-readable output")

    r = sub.add_parser("recognize", help="decide membership, with certificate/witness")
    inputs(r)
    r.add_argument("--certificate", action="store_true")
    r.add_argument("--witness", action="store_true")
    r.add_argument("--oracle", action="store_true", help="cross-check by enumerating spanning trees")
    r.add_argument("--tree-cap", type=int, default=10**6)

    a = sub.add_parser("ak", help="anti-Kekule number")
    inputs(a)
    a.add_argument("--all-min-sets", action="store_true")
    a.add_argument("--max-k", type=int, default=None)

    e = sub.add_parser("edges", help="classify edges as fixed double/single or free")
    inputs(e)

    g = sub.add_parser("gen", help="emit generated graphs as graph6")
    g.add_argument(
        "kind",
        choices=["corona", "cycle", "path", "complete", "compose", "sample-g", "sample-pm-tree"],
    )
    g.add_argument("--n", type=int)
    g.add_argument("--base", choices=["complete", "cycle", "path"], default="complete")
    g.add_argument("--half-order", type=int)
    g.add_argument("--seed", type=int)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--host", help="host graph (graph6) for compose")
    g.add_argument("--attach", action="append", help="GRAPH6:VERTEX, once per host vertex")

    x = sub.add_parser("extremal", help="check the maximum-size bound")
    x.add_argument("--half-order", type=int, required=True)
    src = x.add_mutually_exclusive_group(required=True)
    src.add_argument("--exhaustive", action="store_true")
    src.add_argument("--file")
    x.add_argument("--augment-check", action="store_true",
                   help="also check that adding any edge to K_n o K_1 leaves the family")
    x.add_argument("--pretty", action="store_true")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "recognize":
            return _analyze(args, _run_recognize)
        if args.command == "ak":
            return _analyze(args, _run_ak)
        if args.command == "edges":
            return _analyze(args, _run_edges)
        if args.command == "gen":
            return _cmd_gen(args)
        return _cmd_extremal(args)
    except (GraphError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
