"""Command-line front end.

Exit codes: 0 success/pass, 1 validation failure, 2 usage or input-format
error, 3 domain error (disconnected, not chordal, not in region).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from . import __version__
from .clique_lattice import build_lattice, edge_partition, lattice_to_dict
from .clique_trees import (
    count_clique_trees,
    enumerate_clique_trees,
    has_rip,
    tree_from_json,
    tree_to_json,
    validate_cip,
    validate_definition,
    validate_local_max_weight,
)
from .errors import CliqueTreeError, GraphFormatError, NotChordalError, NotInRegion, Verdict
from .graph_core import Graph, is_chordal, parse_graph
from .separators import ORACLE_MAX_VERTICES, minimal_separators_lattice, minimal_separators_oracle, reduced_clique_graph, separators_to_json
from .shearer import (
    EXACT_LAW_MAX_VERTICES,
    c_from_p,
    default_tree_order,
    exact_block_factor_law,
    format_vector,
    p_from_c,
    parse_vector,
    sample_block_factor_batch,
    shearer_region_membership,
    vector_to_json,
    verify_shearer_law,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class _Out:
    """Collects one result document; renders it as JSON or as plain lines."""

    def __init__(self, command: str, fmt: str):
        self.fmt = fmt
        self.doc: dict[str, Any] = {"version": __version__, "command": command}
        self.lines: list[str] = []

    def put(self, key: str, value: Any, *human: str) -> None:
        self.doc[key] = value
        self.lines.extend(human)

    def emit(self, stream) -> None:
        if self.fmt == "json":
            stream.write(json.dumps(self.doc, indent=2) + "\n")
        else:
            stream.write("".join(line + "\n" for line in self.lines))


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _names(g: Graph, vertices) -> list[str]:
    return [g.names[v] for v in sorted(vertices)]


_VERTEX_KEYS = {"vertex"}
_VERTEX_SET_KEYS = {"missing", "intersection"}


def _verdict_json(v: Verdict, g: Graph) -> dict:
    witness = {}
    for key, value in v.witness.items():
        if key in _VERTEX_KEYS:
            value = g.names[value]
        elif key in _VERTEX_SET_KEYS:
            value = _names(g, value)
        witness[key] = value
    return {"ok": v.ok, "reason": v.reason, "witness": _jsonable(witness)}


def _jsonable(x: Any) -> Any:
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


# -- subcommands ----------------------------------------------------------------


def cmd_check_chordal(args, g: Graph, out: _Out) -> int:
    verdict = is_chordal(g)
    if verdict:
        out.put("chordal", True, "chordal")
        out.put("peo", _names_in_order(g, verdict.peo), "peo: " + " ".join(_names_in_order(g, verdict.peo)))
        return EXIT_OK
    cycle = _names_in_order(g, verdict.witness)
    out.put("chordal", False, "not chordal")
    out.put("witness", cycle, "chordless cycle: " + " ".join(cycle))
    return EXIT_DOMAIN


def _names_in_order(g: Graph, vertices) -> list[str]:
    return [g.names[v] for v in vertices]


def cmd_cliques(args, g: Graph, out: _Out) -> int:
    cg = build_lattice(g).clique_graph
    cliques = [cg.clique_names(k) for k in range(cg.size)]
    out.put("cliques", cliques, *(f"K{k}: " + " ".join(c) for k, c in enumerate(cliques)))
    return EXIT_OK


def cmd_clique_graph(args, g: Graph, out: _Out) -> int:
    cg = build_lattice(g).clique_graph
    cmd_cliques(args, g, out)
    edges = [{"cliques": [i, j], "label": _names(g, cg.labels[(i, j)])} for i, j in cg.edges]
    out.put("edges", edges, *(f"K{e['cliques'][0]} K{e['cliques'][1]}: " + " ".join(e["label"]) for e in edges))
    return EXIT_OK


def cmd_families(args, g: Graph, out: _Out) -> int:
    doc = lattice_to_dict(build_lattice(g))
    out.put("cliques", doc["cliques"])
    human = []
    for f in doc["families"]:
        human.append(
            f"F{f['id']}: cliques {f['cliques']} max_generator {f['max_generator']} "
            f"R={f['R']['edges']} S={f['S']['edges']} "
            f"B=({f['B']['vertices']} vertices, {f['B']['edges']} edges, {f['B']['loops']} loops)"
        )
    out.put("families", doc["families"], *human)
    return EXIT_OK


def cmd_partition(args, g: Graph, out: _Out) -> int:
    lattice = build_lattice(g)
    cg = lattice.clique_graph
    rows = []
    for (i, j), f in edge_partition(cg, lattice).items():
        rows.append({"edge": [cg.clique_names(i), cg.clique_names(j)], "family": lattice.index(f)})
    out.put("partition", rows, *(f"{r['edge'][0]} -- {r['edge'][1]} -> F{r['family']}" for r in rows))
    return EXIT_OK


def cmd_count_trees(args, g: Graph, out: _Out) -> int:
    count = count_clique_trees(g)
    out.put("count", count, str(count))
    return EXIT_OK


def cmd_enum_trees(args, g: Graph, out: _Out) -> int:
    lattice = build_lattice(g)
    cg = lattice.clique_graph
    trees = []
    for k, tree in enumerate(enumerate_clique_trees(lattice)):
        if args.limit is not None and k >= args.limit:
            break
        trees.append(tree_to_json(cg, tree))
    human = ["; ".join(f"{{{' '.join(a)}}}-{{{' '.join(b)}}}" for a, b in t) for t in trees]
    out.put("trees", trees, *human)
    return EXIT_OK


_CRITERIA: dict[str, Callable] = {
    "def": validate_definition,
    "cip": validate_cip,
    "rip": has_rip,
    "maxw": validate_local_max_weight,
}


def _load_trees(text: str) -> list:
    data = json.loads(text)
    if isinstance(data, dict):
        if "trees" in data:
            return data["trees"]
        if "edges" in data:
            return [data["edges"]]
        raise GraphFormatError("tree document needs a 'trees' or 'edges' field")
    return [data]


def cmd_validate_tree(args, g: Graph, out: _Out) -> int:
    lattice = build_lattice(g)
    cg = lattice.clique_graph
    try:
        raw_trees = _load_trees(_read(args.tree))
        trees = [tree_from_json(cg, t) for t in raw_trees]
    except (ValueError, KeyError) as exc:
        raise GraphFormatError(f"bad tree file: {exc}") from exc
    names = list(_CRITERIA) if args.criterion == "all" else [args.criterion]
    results, human, ok = [], [], True
    for k, tree in enumerate(trees):
        row = {}
        for name in names:
            target = lattice if name == "maxw" else cg
            verdict = _CRITERIA[name](target, tree)
            ok &= verdict.ok
            row[name] = _verdict_json(verdict, g)
            human.append(f"tree {k} {name}: " + ("pass" if verdict else f"FAIL {verdict.reason}"))
        results.append(row)
    out.put("results", results, *human)
    out.put("passed", ok)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_separators(args, g: Graph, out: _Out) -> int:
    lattice = build_lattice(g)
    seps = separators_to_json(g, minimal_separators_lattice(lattice))
    out.put("separators", seps, *(" ".join(s) for s in seps))
    if args.oracle:
        oracle = separators_to_json(g, minimal_separators_oracle(g, args.max_vertices))
        agree = oracle == seps
        out.put("oracle", oracle, "oracle: " + ("agrees" if agree else f"DISAGREES {oracle}"))
        out.put("agree", agree)
        return EXIT_OK if agree else EXIT_FAIL
    return EXIT_OK


def cmd_reduced_graph(args, g: Graph, out: _Out) -> int:
    lattice = build_lattice(g)
    cg = lattice.clique_graph
    edges = tree_to_json(cg, reduced_clique_graph(cg, minimal_separators_lattice(lattice)))
    out.put("edges", edges, *(f"{{{' '.join(a)}}}-{{{' '.join(b)}}}" for a, b in edges))
    return EXIT_OK


# -- shearer ------------------------------------------------------------------------


def _vector_arg(path: str | None, g: Graph, flag: str):
    if path is None:
        raise GraphFormatError(f"{flag} FILE is required")
    return parse_vector(_read(path), g)


def _put_vector(out: _Out, key: str, g: Graph, values) -> None:
    out.put(key, vector_to_json(g, values), *format_vector(g, values).splitlines())


def cmd_shearer(args, g: Graph, out: _Out) -> int:
    lattice = build_lattice(g)
    order = default_tree_order(lattice, args.order_root)
    action = args.action
    out.doc["order"] = [g.names[v] for v in order.linear_extension]

    if action == "region":
        p = _vector_arg(args.prob, g, "--prob")
        verdict = shearer_region_membership(g, p, order, oracle=args.oracle)
        out.put("region", verdict.region.value, f"region: {verdict.region.value}")
        if verdict.coupling is not None:
            _put_vector(out, "values", g, verdict.coupling)
        if verdict.failure is not None:
            bad = verdict.failure
            shown = "p/0" if bad.value is None else str(bad.value)
            out.put("failure", {"vertex": g.names[bad.vertex], "value": shown},
                    f"fails at vertex {g.names[bad.vertex]}: {shown}")
        if args.oracle:
            out.put("oracle_region", verdict.oracle_region.value, f"oracle: {verdict.oracle_region.value}")
            return EXIT_OK if verdict.agrees else EXIT_FAIL
        return EXIT_OK

    if action == "c-from-p":
        p = _vector_arg(args.prob, g, "--prob")
        c = c_from_p(order, p)
        _put_vector(out, "values", g, c)
        out.put("strict", all(x < 1 for x in c))
        return EXIT_OK

    if action == "p-from-c":
        c = _vector_arg(args.coupling, g, "--coupling")
        marg = p_from_c(order, c)
        _put_vector(out, "values", g, marg.p)
        out.put("strict", marg.strict)
        return EXIT_OK

    if args.coupling is not None:
        c = _vector_arg(args.coupling, g, "--coupling")
        p = _vector_arg(args.prob, g, "--prob") if args.prob else p_from_c(order, c).p
    else:
        p = _vector_arg(args.prob, g, "--prob")
        c = c_from_p(order, p)

    if action == "sample":
        draws = sample_block_factor_batch(order, c, args.samples, args.seed)
        rows = ["".join(str(int(b)) for b in row) for row in draws]
        out.put("vertices", list(g.names), "# " + " ".join(g.names))
        out.put("samples", rows, *rows)
        return EXIT_OK

    law = exact_block_factor_law(order, c, max_vertices=args.max_vertices)
    if action == "exact-law":
        table = law.to_json()
        out.put("law", table, *(f"{k} {v}" for k, v in table.items()))
        return EXIT_OK

    report = verify_shearer_law(law, g, p)
    summary = report.summary()
    out.put("checks", summary, *(f"{k}: {'pass' if v['passed'] else 'FAIL'} (max deviation {v['max_deviation']})"
                                 for k, v in summary.items()))
    out.put("passed", bool(report))
    return EXIT_OK if report else EXIT_FAIL


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("graph", nargs="?", default="-", help="edge-list file (default: stdin)")
    common.add_argument("--format", choices=("human", "json"), default="human")

    parser = argparse.ArgumentParser(prog="cliquetrees", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    add("check-chordal", cmd_check_chordal, "chordality with certificate or chordless cycle")
    add("cliques", cmd_cliques, "maximal cliques")
    add("clique-graph", cmd_clique_graph, "clique graph with intersection labels")
    add("families", cmd_families, "clique-family lattice with R/S/B summaries")
    add("partition", cmd_partition, "clique-graph edge to family map")
    add("count-trees", cmd_count_trees, "exact number of clique trees")
    sp = add("enum-trees", cmd_enum_trees, "stream clique trees")
    sp.add_argument("--limit", type=int, default=None)
    sp = add("validate-tree", cmd_validate_tree, "check spanning trees against the characterisations")
    sp.add_argument("--tree", required=True, help="JSON tree file (enum-trees output accepted)")
    sp.add_argument("--criterion", choices=("def", "cip", "rip", "maxw", "all"), default="all")
    sp = add("separators", cmd_separators, "minimal vertex separators")
    sp.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")
    sp.add_argument("--max-vertices", type=int, default=ORACLE_MAX_VERTICES, help="size gate of the oracle")
    add("reduced-graph", cmd_reduced_graph, "reduced clique graph")
    sp = sub.add_parser("shearer", help="Shearer's law tools")
    sp.set_defaults(func=cmd_shearer)
    sp.add_argument("action", choices=("region", "c-from-p", "p-from-c", "sample", "exact-law", "verify"))
    sp.add_argument("graph", nargs="?", default="-", help="edge-list file (default: stdin)")
    sp.add_argument("--format", choices=("human", "json"), default="human")
    sp.add_argument("--order-root", type=int, default=0, help="root clique of the tree order")
    sp.add_argument("--prob", help="marginal vector file")
    sp.add_argument("--coupling", help="coupling vector file")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=1)
    sp.add_argument("--oracle", action="store_true", help="region: also run the all-subset test")
    sp.add_argument("--max-vertices", type=int, default=EXACT_LAW_MAX_VERTICES, help="size gate of exact-law and verify")
    return parser


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(args.command, args.format)
    try:
        g = parse_graph(_read(args.graph))
        code = args.func(args, g, out)
    except (GraphFormatError, OSError, json.JSONDecodeError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except CliqueTreeError as exc:
        message = str(exc)
        if isinstance(exc, NotChordalError):
            out.doc["witness"] = _names_in_order(g, exc.witness)
            message = "graph is not chordal; chordless cycle " + " ".join(out.doc["witness"])
        if isinstance(exc, NotInRegion):
            shown = "p/0" if exc.value is None else str(exc.value)
            out.doc["witness"] = {"vertex": g.names[exc.vertex], "value": shown}
            message = f"not in region: coupling value at vertex {g.names[exc.vertex]} is {shown}"
        out.doc["error"] = message
        stderr.write(f"error: {message}\n")
        if args.format == "json":
            out.emit(stdout)
        return EXIT_DOMAIN
    except ValueError as exc:
        # size gates and out-of-range options
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    out.emit(stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
