"""Command-line front end.

    supergraphs catalog [--max-order N] [--filter TEXT]
    supergraphs build --group S3 --kind power --rel conj [--format dot|json] [--output PATH]
    supergraphs analyze --group D4 [--kind K --rel R] [--class-profile]
    supergraphs verify [--theorem ID ...] [--max-order N] [--output PATH]
    supergraphs search --problem eight-distinct|oscom-dominant|pair-equalities
    supergraphs export --group Q8 --dir OUT [--format dot|json]

Exit status: 0 success, 1 a predicted check failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import harness
from .analysis import analyze_graph
from .catalog import catalog, get_group
from .classes import class_profile
from .group import ALL_PAIRS_CAP, GroupError, load_cayley_json
from .supergraph import GraphKind, RelKind, build_graph

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    group: str | None = None
    kind: GraphKind | None = None
    rel: RelKind | None = None
    max_order: int | None = None
    graph_cap: int = ALL_PAIRS_CAP
    clique_cap: int = ALL_PAIRS_CAP
    output: str | None = None
    fmt: str = "json"

    def __post_init__(self):
        for cap in (self.graph_cap, self.clique_cap):
            if cap <= 0:
                raise UsageError("caps must be positive")
        if self.max_order is not None and self.max_order <= 0:
            raise UsageError("--max-order must be positive")


def load_group(selector: str):
    path = Path(selector)
    if selector.endswith(".json") or path.is_file():
        if not path.is_file():
            raise UsageError(f"no such file: {selector}")
        return load_cayley_json(path)
    return get_group(selector)


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="supergraphs", description="Power, enhanced power and commuting supergraphs on finite groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("catalog", help="list built-in groups as JSON lines")
    c.add_argument("--max-order", type=int)
    c.add_argument("--filter", default=None)

    def graph_opts(q, required=True):
        q.add_argument("--group", required=True, help="catalog id (e.g. S3, D4xC3) or Cayley-table JSON path")
        q.add_argument("--kind", choices=[k.value for k in GraphKind], required=required)
        q.add_argument("--rel", choices=[r.value for r in RelKind], required=required)
        q.add_argument("--graph-cap", type=int, default=ALL_PAIRS_CAP)
        q.add_argument("--no-convention", action="store_true", help="do not force B-classes to be cliques")

    b = sub.add_parser("build", help="build one graph and emit DOT or JSON")
    graph_opts(b)
    b.add_argument("--format", choices=["dot", "json"], default="json")
    b.add_argument("--output")

    a = sub.add_parser("analyze", help="graph parameters as JSON")
    graph_opts(a, required=False)
    a.add_argument("--class-profile", action="store_true")
    a.add_argument("--clique-cap", type=int, default=ALL_PAIRS_CAP)
    a.add_argument("--max-cliques", type=int, default=1000)
    a.add_argument("--output")

    v = sub.add_parser("verify", help="run theorem checks over the catalog")
    v.add_argument("--theorem", action="append", choices=harness.THEOREM_IDS)
    v.add_argument("--max-order", type=int, default=200)
    v.add_argument("--output")
    v.add_argument("--timings", action="store_true", help="add per-report runtimes (breaks byte-identical output)")
    v.add_argument("--quiet", action="store_true", help="suppress the summary table on stderr")

    s = sub.add_parser("search", help="open-problem searches")
    s.add_argument("--problem", choices=["eight-distinct", "oscom-dominant", "pair-equalities"], default="eight-distinct")
    s.add_argument("--max-order", type=int, default=200)
    s.add_argument("--output")

    e = sub.add_parser("export", help="write all nine graphs of a group to a directory")
    e.add_argument("--group", required=True)
    e.add_argument("--dir", required=True)
    e.add_argument("--format", choices=["dot", "json"], default="json")
    e.add_argument("--graph-cap", type=int, default=ALL_PAIRS_CAP)
    return p


def _cmd_catalog(args) -> int:
    cfg = RunConfig("catalog", max_order=args.max_order)
    lines = [json.dumps(e.as_dict()) for e in catalog(cfg.max_order, args.filter)]
    _write("\n".join(lines) + ("\n" if lines else ""), None)
    return EXIT_OK


def _cmd_build(args) -> int:
    cfg = RunConfig("build", args.group, GraphKind(args.kind), RelKind(args.rel),
                    graph_cap=args.graph_cap, output=args.output, fmt=args.format)
    G = load_group(cfg.group)
    graph = build_graph(G, cfg.kind, cfg.rel, convention=not args.no_convention, cap=cfg.graph_cap)
    text = graph.to_dot() if cfg.fmt == "dot" else json.dumps(graph.to_json()) + "\n"
    _write(text, cfg.output)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    if (args.kind is None) != (args.rel is None):
        raise UsageError("--kind and --rel go together")
    cfg = RunConfig("analyze", args.group, graph_cap=args.graph_cap, clique_cap=args.clique_cap, output=args.output)
    G = load_group(cfg.group)
    out = {}
    if args.class_profile:
        out["class_profile"] = class_profile(G).as_dict()
    if args.kind is not None:
        pairs = [(GraphKind(args.kind), RelKind(args.rel))]
    elif args.class_profile:
        pairs = []
    else:
        pairs = [(k, r) for r in RelKind for k in GraphKind]
    graphs = []
    for k, r in pairs:
        graph = build_graph(G, k, r, convention=not args.no_convention, cap=cfg.graph_cap)
        graphs.append(analyze_graph(graph, clique_cap=cfg.clique_cap, max_cliques=args.max_cliques))
    if graphs:
        out["graphs"] = graphs
    _write(json.dumps(out, default=harness._jsonable) + "\n", cfg.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    cfg = RunConfig("verify", max_order=args.max_order, output=args.output)
    reports = harness.run_verification(cfg.max_order, args.theorem)
    lines = [r.to_json(timings=args.timings) for r in reports]
    _write("\n".join(lines) + "\n", cfg.output)
    if not args.quiet:
        print(harness.format_summary(reports), file=sys.stderr)
    return EXIT_FAIL if any(r.verdict == harness.FAIL for r in reports) else EXIT_OK


def _cmd_search(args) -> int:
    cfg = RunConfig("search", max_order=args.max_order, output=args.output)
    entries = catalog(cfg.max_order)
    if args.problem == "eight-distinct":
        hit = harness.search_eight_distinct(entries)
        if hit is None:
            payload = {"problem": "eight-distinct", "max_order": cfg.max_order, "found": None}
        else:
            entry, matrix = hit
            payload = {"problem": "eight-distinct", "max_order": cfg.max_order, "found": entry.name,
                       "order": entry.order, "distinguishing_pairs": matrix}
        text = json.dumps(payload) + "\n"
    elif args.problem == "oscom-dominant":
        rows = []
        for e in entries:
            G = get_group(e.name)
            rep = [r for r in harness.check_dominant(G) if r.theorem == "dominant:OSCom"][0]
            rows.append(json.dumps({"group": G.name, "order": G.order,
                                    "dominant": [G.label(v) for v in rep.computed],
                                    "count": len(rep.computed)}))
        text = "\n".join(rows) + "\n"
    else:
        text = "\n".join(json.dumps(harness.pair_equalities(get_group(e.name))) for e in entries) + "\n"
    _write(text, cfg.output)
    return EXIT_OK


def _cmd_export(args) -> int:
    cfg = RunConfig("export", args.group, graph_cap=args.graph_cap, fmt=args.format)
    G = load_group(cfg.group)
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    for r in RelKind:
        for k in GraphKind:
            graph = build_graph(G, k, r, cap=cfg.graph_cap)
            path = out / f"{G.name}_{graph.name}.{cfg.fmt}"
            path.write_text(graph.to_dot() if cfg.fmt == "dot" else json.dumps(graph.to_json()) + "\n")
    return EXIT_OK


COMMANDS = {
    "catalog": _cmd_catalog,
    "build": _cmd_build,
    "analyze": _cmd_analyze,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "export": _cmd_export,
}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except (UsageError, GroupError, OSError, json.JSONDecodeError) as exc:
        print(f"supergraphs: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
