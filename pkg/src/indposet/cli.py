"""Command-line front end.

    indposet tops GRAPH [--tree] [--format text|json]
    indposet mops GRAPH [--format text|json]
    indposet hasse GRAPH [--mops] [--format text|json|dot]
    indposet check GRAPH [--format text|json]
    indposet row GRAPH [--from FILE] [--trace] [--format text|json]
    indposet verify [--max-n N] [--sample K] [--seed S] [--format text|json]

GRAPH is a path to a graph file or the name of a catalog graph such as
tam6.  Files ending in .json hold {"vertices": [...], "edges": [[u, v],
...]}; anything else is read as a plain edge list with one "u v" line
per edge.  Exit codes: 0 success, 1 a checked property fails, 2
unreadable input, 3 size guard, 4 invalid top.
"""

import argparse
import json
import os
import sys

from .catalog import CATALOG
from .digraph import (all_dags, from_edge_list, from_json, labels_of,
                      linear_extension, reverse_all, to_json, toggle_graph,
                      digraph_isomorphic)
from .errors import NotIndependent, NotOrthogonal, TooLarge
from .extremal import (enumerate_mops, five_set_witness, galois_graph,
                       is_trim, mop_lattice, mop_to_json, theta,
                       witness_to_json)
from .poset import (dual, independence_poset, is_lattice, poset_isomorphic,
                    poset_to_dot, poset_to_json)
from .tops import (complete_up, enumerate_tops, flip, flip_tree, is_tight,
                   loose_move, min_top, row, row_orbits, toggle_top,
                   top_from_json, top_to_json)
from .verify import PROPERTIES, sample_graphs, sweep


class _Bail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code
        self.message = message


def _load_graph(arg):
    if not os.path.exists(arg) and arg in CATALOG:
        return CATALOG[arg]
    try:
        with open(arg, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise _Bail(2, f"cannot read {arg}: {exc}") from exc
    try:
        if arg.endswith(".json"):
            return from_json(json.loads(text))
        return from_edge_list(text)
    except ValueError as exc:
        raise _Bail(2, f"cannot parse {arg}: {exc}") from exc


def _load_top(dag, path):
    try:
        with open(path, encoding="utf-8") as handle:
            obj = json.load(handle)
    except OSError as exc:
        raise _Bail(2, f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise _Bail(2, f"cannot parse {path}: {exc}") from exc
    try:
        t = top_from_json(dag, obj)
        tight = is_tight(dag, t.down, t.up)
    except (NotIndependent, NotOrthogonal, ValueError) as exc:
        raise _Bail(4, f"invalid top: {exc}") from exc
    if not tight:
        raise _Bail(4, f"top {_fmt_top(dag, t)} is not tight: "
                       f"{loose_move(dag, t.down, t.up)}")
    completed = complete_up(dag, t.down)
    if completed != t:
        # rare: every single-element perturbation is blocked, yet the pair
        # is not the completion of its own down part and so not a top
        raise _Bail(4, f"top {_fmt_top(dag, t)} is not tight: its down part "
                       f"completes to {_fmt_top(dag, completed)}")
    return t


def _fmt_set(dag, mask):
    return "{" + ",".join(labels_of(dag, mask)) + "}"


def _fmt_top(dag, t):
    return f"(D={_fmt_set(dag, t.down)}, U={_fmt_set(dag, t.up)})"


def _fmt_mop(dag, m):
    return f"(X={_fmt_set(dag, m.x)}, Y={_fmt_set(dag, m.y)})"


def _emit(lines):
    print("\n".join(lines))


def cmd_tops(args):
    dag = _load_graph(args.graph)
    tops = enumerate_tops(dag)
    tree_edges = None
    if args.tree:
        order, edges = flip_tree(dag)
        index = {t: i for i, t in enumerate(tops)}
        tree_edges = [(index[order[p]], index[order[c]], dag.labels[g])
                      for p, c, g in edges]
    if args.format == "json":
        obj = {"count": len(tops),
               "tops": [top_to_json(dag, t) for t in tops]}
        if tree_edges is not None:
            obj["tree"] = [list(e) for e in tree_edges]
        print(json.dumps(obj, indent=2))
        return 0
    lines = [f"{len(tops)} top" + ("s" if len(tops) != 1 else "")]
    lines += [_fmt_top(dag, t) for t in tops]
    if tree_edges is not None:
        lines.append("flip tree:")
        lines += [f"  {_fmt_top(dag, tops[p])} -> {_fmt_top(dag, tops[c])}"
                  f" at {g}" for p, c, g in tree_edges]
    _emit(lines)
    return 0


def cmd_mops(args):
    dag = _load_graph(args.graph)
    mops = enumerate_mops(dag)
    if args.format == "json":
        print(json.dumps({"count": len(mops),
                          "mops": [mop_to_json(dag, m) for m in mops]},
                         indent=2))
        return 0
    lines = [f"{len(mops)} mop" + ("s" if len(mops) != 1 else "")]
    lines += [_fmt_mop(dag, m) for m in mops]
    _emit(lines)
    return 0


def cmd_hasse(args):
    dag = _load_graph(args.graph)
    if args.mops:
        p = mop_lattice(dag)

        def parts(m):
            return _fmt_set(dag, m.x), _fmt_set(dag, m.y)

        def render(m):
            return _fmt_mop(dag, m)

        def payload_json(m):
            return mop_to_json(dag, m)
    else:
        p = independence_poset(dag)

        def parts(t):
            return _fmt_set(dag, t.down), _fmt_set(dag, t.up)

        def render(t):
            return _fmt_top(dag, t)

        def payload_json(t):
            return top_to_json(dag, t)

    if args.format == "dot":
        print(poset_to_dot(p, parts), end="")
        return 0
    if args.format == "json":
        print(json.dumps(poset_to_json(p, payload_json), indent=2))
        return 0
    lines = [f"{p.m} elements, {len(p.covers)} covers"]
    lines += [f"{i}: {render(pl)}" for i, pl in enumerate(p.payloads)]
    lines.append("covers:")
    lines += [f"{x} < {y}" for x, y in p.covers]
    _emit(lines)
    return 0


def cmd_check(args):
    dag = _load_graph(args.graph)
    tops = enumerate_tops(dag)
    mops = enumerate_mops(dag)
    p = independence_poset(dag)
    lattice = bool(is_lattice(p))
    trim = is_trim(mop_lattice(dag))

    try:
        witness = five_set_witness(dag)
    except TooLarge:
        witness_text = witness_json = "skipped"
    else:
        witness_text = "none" if witness is None else (
            f"(X1={_fmt_set(dag, witness.x1)}, X2={_fmt_set(dag, witness.x2)},"
            f" X3={_fmt_set(dag, witness.x3)}, X4={_fmt_set(dag, witness.x4)},"
            f" Z={_fmt_set(dag, witness.z)})")
        witness_json = None if witness is None else witness_to_json(dag, witness)

    if lattice:
        try:
            galois = digraph_isomorphic(galois_graph(p), dag)
        except TooLarge:
            galois = "skipped"
    else:
        galois = None
    galois_text = {None: "n/a (not a lattice)", True: "true",
                   False: "false", "skipped": "skipped"}[galois]

    sizes = [len({theta(dag, t, order) for t in tops})
             for order in ("t1_then_t2", "t2_then_t1")]
    images_equal = ({theta(dag, t, "t1_then_t2") for t in tops}
                    == {theta(dag, t, "t2_then_t1") for t in tops})

    try:
        sd_poset = poset_isomorphic(p, dual(p))
    except TooLarge:
        sd_poset = "skipped"
    try:
        sd_graph = digraph_isomorphic(dag, reverse_all(dag))
    except TooLarge:
        sd_graph = "skipped"

    code = 1 if galois is False else 0
    if args.format == "json":
        print(json.dumps({
            "vertices": dag.n,
            "edges": len(list(dag.edges())),
            "tops": len(tops),
            "mops": len(mops),
            "lattice": lattice,
            "trim": trim,
            "five_set_witness": witness_json,
            "galois_round_trip": galois,
            "theta_t1_then_t2": sizes[0],
            "theta_t2_then_t1": sizes[1],
            "theta_images_equal": images_equal,
            "self_dual_poset": sd_poset,
            "self_dual_graph": sd_graph,
        }, indent=2))
        return code

    def verdict(value):
        return value if isinstance(value, str) else str(value).lower()

    _emit([
        f"vertices: {dag.n}",
        f"edges: {len(list(dag.edges()))}",
        f"tops: {len(tops)}",
        f"mops: {len(mops)}",
        f"top poset is a lattice: {verdict(lattice)}",
        f"mop lattice is trim: {verdict(trim)}",
        f"five-set witness: {witness_text}",
        f"galois round-trip: {galois_text}",
        f"theta image (t1 then t2): {sizes[0]} of {len(mops)} mops",
        f"theta image (t2 then t1): {sizes[1]} of {len(mops)} mops",
        f"theta images equal: {verdict(images_equal)}",
        f"self-dual top poset: {verdict(sd_poset)}",
        f"self-dual graph: {verdict(sd_graph)}",
    ])
    return code


def cmd_row(args):
    dag = _load_graph(args.graph)
    if args.start is None and not args.trace:
        orbits = row_orbits(dag)
        if args.format == "json":
            print(json.dumps({"orbits": [
                {"length": orbit.length,
                 "tops": [top_to_json(dag, t) for t in orbit.tops]}
                for orbit in orbits]}, indent=2))
            return 0
        lines = [f"{len(orbits)} orbit" + ("s" if len(orbits) != 1 else "")]
        for k, orbit in enumerate(orbits, start=1):
            chain = " -> ".join(_fmt_top(dag, t) for t in orbit.tops)
            lines.append(f"orbit {k} (length {orbit.length}): {chain}")
        _emit(lines)
        return 0

    start = min_top(dag) if args.start is None else _load_top(dag, args.start)
    image = row(dag, start, method="global")

    slow_steps = []
    cur = start
    for g in linear_extension(dag):
        cur = flip(dag, cur, g)
        slow_steps.append((dag.labels[g], cur))
    slow = cur

    deform_steps = []
    cur, graph = start, dag
    for g in linear_extension(dag, reversed=True):
        cur = toggle_top(graph, cur, g)
        graph = toggle_graph(graph, g)
        deform_steps.append((dag.labels[g], cur))
    deform = cur

    agree = image == slow == deform
    if args.format == "json":
        obj = {"start": top_to_json(dag, start),
               "image": top_to_json(dag, image),
               "methods_agree": agree}
        if args.trace:
            obj["slow"] = [[g, top_to_json(dag, t)] for g, t in slow_steps]
            obj["deform"] = [[g, top_to_json(dag, t)] for g, t in deform_steps]
        print(json.dumps(obj, indent=2))
        return 0 if agree else 1

    lines = [f"start: {_fmt_top(dag, start)}",
             f"image: {_fmt_top(dag, image)}"]
    if args.trace:
        lines.append("slow motion flips:")
        lines += [f"  flip {g}: {_fmt_top(dag, t)}" for g, t in slow_steps]
        lines.append("deformotion toggles:")
        lines += [f"  toggle {g}: {_fmt_top(dag, t)}" for g, t in deform_steps]
    lines.append(f"methods agree: {str(agree).lower()}")
    _emit(lines)
    return 0 if agree else 1


def cmd_verify(args):
    header = []
    if args.sample is None:
        if args.max_n > 5:
            raise _Bail(3, "exhausting all graphs past 5 vertices is too "
                           "slow; pass --sample K")
        total, failures, layers = 0, {}, []
        for n in range(1, args.max_n + 1):
            layer = list(all_dags(n))
            layers.append((n, len(layer)))
            count, found = sweep(layer)
            total += count
            for key, value in found.items():
                failures.setdefault(key, value)
            header.append(f"n={n}: {len(layer)} graph"
                          + ("s" if len(layer) != 1 else ""))
    else:
        total, failures = sweep(sample_graphs(args.max_n, args.sample,
                                              args.seed))
        low = 5 if args.max_n >= 5 else 1
        span = str(low) if low == args.max_n else f"{low}-{args.max_n}"
        header.append(f"sample: {args.sample} graphs on {span} vertices, "
                      f"seed {args.seed}")

    results = {}
    lines = list(header)
    for key, title, _ in PROPERTIES:
        if key in failures:
            bad, detail = failures[key]
            lines.append(f"({key}) {title}: FAIL")
            lines.append(f"    graph: {json.dumps(to_json(bad))}")
            lines.append(f"    {detail}")
            results[key] = {"status": "fail", "graph": to_json(bad),
                            "detail": detail}
        else:
            lines.append(f"({key}) {title}: pass")
            results[key] = {"status": "pass"}
    if failures:
        lines.append(f"{len(failures)} of {len(PROPERTIES)} properties FAIL "
                     f"on {total} graphs")
    else:
        lines.append(f"all {len(PROPERTIES)} properties pass on {total} "
                     f"graphs")

    if args.format == "json":
        obj = {"graphs": total, "properties": results}
        if args.sample is None:
            obj["layers"] = {str(n): count for n, count in layers}
        else:
            obj["sample"] = {"count": args.sample, "max_n": args.max_n,
                             "seed": args.seed}
        print(json.dumps(obj, indent=2))
    else:
        _emit(lines)
    return 1 if failures else 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="indposet",
        description="Tops, rowmotion, and orthogonal-pair lattices of "
                    "finite DAGs.")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="command")

    def graph_command(name, help_text, formats=("text", "json")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph",
                       help="graph file (.json or edge list) or catalog name")
        p.add_argument("--format", choices=formats, default="text")
        return p

    p = graph_command("tops", "list every top of the graph")
    p.add_argument("--tree", action="store_true",
                   help="include the flip tree")
    graph_command("mops", "list every maximal orthogonal pair")
    p = graph_command("hasse", "emit the top poset or the mop lattice",
                      formats=("text", "json", "dot"))
    p.add_argument("--mops", action="store_true",
                   help="use the mop lattice instead of the top poset")
    graph_command("check", "summarize structural facts about one graph")
    p = graph_command("row", "rowmotion orbits, or one image with --from")
    p.add_argument("--from", dest="start", metavar="FILE",
                   help="top JSON file to act on (default: the minimum top)")
    p.add_argument("--trace", action="store_true",
                   help="log every flip and toggle of one rowmotion step")
    p = sub.add_parser("verify",
                       help="cross-check the library on many graphs")
    p.add_argument("--max-n", dest="max_n", type=int, default=4, metavar="N",
                   help="largest vertex count (default 4)")
    p.add_argument("--sample", type=int, metavar="K",
                   help="check K random graphs instead of all of them")
    p.add_argument("--seed", type=int, default=0, metavar="S",
                   help="random seed for --sample (default 0)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


_HANDLERS = {
    "tops": cmd_tops,
    "mops": cmd_mops,
    "hasse": cmd_hasse,
    "check": cmd_check,
    "row": cmd_row,
    "verify": cmd_verify,
}


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except _Bail as bail:
        print(f"error: {bail.message}", file=sys.stderr)
        return bail.code
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
