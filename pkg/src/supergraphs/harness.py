"""Executable theorem checks over the group catalog.

Each check returns :class:`VerificationReport` records. ``verdict`` is
``"pass"`` or ``"fail"`` for predicted checks and ``"report"`` for data that
carries no prediction (open problems, vacuous implications, findings).
"""
from __future__ import annotations

import itertools
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import classes as gc
from .analysis import (
    clique_number,
    clique_number_order_superenhanced,
    clique_number_order_superpower,
    comparability_graph,
    conjugacy_power_preorder,
    dominant_vertices,
    find_odd_hole,
    graph_equal,
    is_complete,
    is_transitive,
    maximal_chains,
    maximal_cliques,
    order_power_preorder,
)
from .catalog import CatalogEntry, catalog, embed_graph, get_group
from .group import (
    Group,
    center,
    class_ids,
    class_of,
    cyclic_subgroup,
    centralizer,
    exponent,
    is_p_group,
    spectrum,
    spectrum_of_power,
    subgroup,
)
from .supergraph import GraphKind, RelKind, base_adjacent, build_graph, graph_name

PASS, FAIL, REPORT = "pass", "fail", "report"


@dataclass
class VerificationReport:
    theorem: str
    group: str
    predicted: object
    computed: object
    verdict: str
    witness: object = None
    runtime: float | None = field(default=None, compare=False)

    def as_dict(self, timings: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "group": self.group,
            "predicted": self.predicted,
            "computed": self.computed,
            "verdict": self.verdict,
            "witness": self.witness,
        }
        if timings:
            out["runtime"] = None if self.runtime is None else round(self.runtime, 4)
        return out

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.as_dict(timings), default=_jsonable)


def _jsonable(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, np.ndarray):
        return x.tolist()
    raise TypeError(f"cannot serialize {type(x)}")


def _compare(theorem, group, predicted, computed, witness=None) -> VerificationReport:
    verdict = PASS if predicted == computed else FAIL
    return VerificationReport(theorem, group, predicted, computed, verdict, witness if verdict == FAIL else None)


def _pair_labels(G: Group, pair):
    if pair is None:
        return None
    return [G.label(pair[0]), G.label(pair[1])]


ALL_KINDS = list(GraphKind)


# ---------------------------------------------------------------------------
# graph equalities


def check_osepow_eq_oscom(G: Group) -> VerificationReport:
    eq, pair = graph_equal(build_graph(G, GraphKind.ENHANCED, RelKind.ORDER),
                           build_graph(G, GraphKind.COMMUTING, RelKind.ORDER))
    return _compare("OSEPow=OSCom", G.name, True, eq, _pair_labels(G, pair))


def _equality_row(G, name, predicate, g1, g2) -> VerificationReport:
    """Biconditional: predicate value vs graph equality, both directions reported."""
    eq, pair = graph_equal(g1, g2)
    pred = bool(predicate)
    rep = _compare(name, G.name, pred, eq)
    if rep.verdict == FAIL:
        if pred:
            rep.witness = {"broken": "predicate => equal", "pair": _pair_labels(G, pair)}
        else:
            rep.witness = {"broken": "equal => predicate", "predicate_witness": list(predicate.witness)}
    return rep


def _implication_row(G, name, premise: bool, g1, g2) -> VerificationReport:
    eq, pair = graph_equal(g1, g2)
    if not premise:
        return VerificationReport(name, G.name, None, eq, REPORT)
    return _compare(name, G.name, True, eq, _pair_labels(G, pair))


def check_equalities(G: Group) -> list[VerificationReport]:
    b = lambda k, r: build_graph(G, k, r)
    P, E, C = GraphKind.POWER, GraphKind.ENHANCED, GraphKind.COMMUTING
    EQ, CJ, OR = RelKind.EQUALITY, RelKind.CONJUGACY, RelKind.ORDER
    no_cpcp = gc.has_CpCp(G)
    no_cpcp = gc.Verdict(not no_cpcp.value, no_cpcp.witness)
    dedekind = gc.is_dedekind(G)
    out = [
        _equality_row(G, "Pow=EPow<=>EPPO", gc.is_eppo(G), b(P, EQ), b(E, EQ)),
        _equality_row(G, "EPow=Com<=>noCpxCp", no_cpcp, b(E, EQ), b(C, EQ)),
        _equality_row(G, "Com=CSCom<=>2-Engel", gc.is_2_engel(G), b(C, EQ), b(C, CJ)),
        _equality_row(G, "Pow=CSPow<=>Dedekind", dedekind, b(P, EQ), b(P, CJ)),
        _equality_row(G, "EPow=CSEPow<=>Dedekind", dedekind, b(E, EQ), b(E, CJ)),
    ]
    abelian = bool(gc.is_abelian(G))
    soic = bool(gc.same_order_implies_conjugate(G))
    for k in ALL_KINDS:
        out.append(_implication_row(G, f"abelian=>{graph_name(k, EQ)}={graph_name(k, CJ)}", abelian, b(k, EQ), b(k, CJ)))
    for k in ALL_KINDS:
        out.append(_implication_row(G, f"sameorder-conj=>{graph_name(k, CJ)}={graph_name(k, OR)}", soic, b(k, CJ), b(k, OR)))
    return out


# ---------------------------------------------------------------------------
# completeness and dominant vertices


def predicted_complete(G: Group) -> dict[str, bool]:
    cyclic = bool(gc.is_cyclic(G))
    abelian = bool(gc.is_abelian(G))
    pgroup = is_p_group(G)[0]
    star = bool(gc.star_property(G))
    out = {}
    for rel in (RelKind.EQUALITY, RelKind.CONJUGACY):
        out[graph_name(GraphKind.POWER, rel)] = cyclic and pgroup
        out[graph_name(GraphKind.ENHANCED, rel)] = cyclic
        out[graph_name(GraphKind.COMMUTING, rel)] = abelian
    out["OSPow"] = pgroup
    out["OSEPow"] = star
    out["OSCom"] = star
    return out


def check_completeness_table(G: Group) -> list[VerificationReport]:
    pred = predicted_complete(G)
    out = []
    for rel in RelKind:
        for kind in GraphKind:
            name = graph_name(kind, rel)
            graph = build_graph(G, kind, rel)
            computed = is_complete(graph)
            witness = None
            if not computed:
                miss = np.argwhere(~graph.adj & ~np.eye(G.order, dtype=bool))
                witness = _pair_labels(G, miss[0]) if len(miss) else None
            out.append(_compare(f"complete:{name}", G.name, pred[name], computed, witness))
    return out


def predicted_power_dominant(G: Group) -> frozenset:
    pgroup = is_p_group(G)[0]
    if gc.is_cyclic(G):
        if pgroup:
            return frozenset(range(G.order))
        return frozenset([0] + np.flatnonzero(G.orders == G.order).tolist())
    if gc.is_generalized_quaternion(G):
        return center(G)
    return frozenset([0])


def predicted_order_power_dominant(G: Group) -> frozenset:
    if is_p_group(G)[0]:
        return frozenset(range(G.order))
    return frozenset([0] + np.flatnonzero(G.orders == exponent(G)).tolist())


def cyclicizer(G: Group) -> frozenset:
    """Elements x with <x, g> cyclic for all g (definition, via closures)."""
    # <x, g> cyclic forces x to commute with g, so only central x qualify
    out = []
    for x in sorted(center(G)):
        if all(g == x or base_adjacent(G, GraphKind.ENHANCED, x, g) for g in range(G.order)):
            out.append(x)
    return frozenset(out)


def _set_report(theorem, G, predicted: frozenset, computed: frozenset) -> VerificationReport:
    rep = _compare(theorem, G.name, sorted(predicted), sorted(computed))
    if rep.verdict == FAIL:
        rep.witness = {"missing": [G.label(x) for x in sorted(predicted - computed)],
                       "extra": [G.label(x) for x in sorted(computed - predicted)]}
    return rep


def check_dominant(G: Group) -> list[VerificationReport]:
    pow_pred = predicted_power_dominant(G)
    enh_pred = cyclicizer(G)
    com_pred = center(G)
    preds = {GraphKind.POWER: pow_pred, GraphKind.ENHANCED: enh_pred, GraphKind.COMMUTING: com_pred}
    out = []
    for rel in (RelKind.EQUALITY, RelKind.CONJUGACY):
        for kind in GraphKind:
            dom = dominant_vertices(build_graph(G, kind, rel))
            out.append(_set_report(f"dominant:{graph_name(kind, rel)}", G, preds[kind], dom))
    dom = dominant_vertices(build_graph(G, GraphKind.POWER, RelKind.ORDER))
    out.append(_set_report("dominant:OSPow", G, predicted_order_power_dominant(G), dom))
    # open problem: record only, with the superset sanity condition
    dom = dominant_vertices(build_graph(G, GraphKind.COMMUTING, RelKind.ORDER))
    floor = center(G) | frozenset(np.flatnonzero(G.orders == exponent(G)).tolist())
    verdict = REPORT if floor <= dom else FAIL
    out.append(VerificationReport("dominant:OSCom", G.name, None, sorted(dom), verdict,
                                  None if verdict == REPORT else {"missing": sorted(floor - dom)}))
    return out


# ---------------------------------------------------------------------------
# orbit joining


def check_orbit_prop(G: Group) -> list[VerificationReport]:
    ids = class_ids(G)
    k = ids.max() + 1
    K = np.zeros((G.order, k), dtype=np.float32)
    K[np.arange(G.order), ids] = 1.0
    out = []
    for kind in GraphKind:
        base = build_graph(G, kind, RelKind.EQUALITY).adj.astype(np.float32)
        sup = build_graph(G, kind, RelKind.CONJUGACY).adj.astype(np.float32)
        has_nbr = (sup @ K) > 0  # [x, c]: x has a neighbour in class c
        touches = (base @ K) > 0  # [g, c]: g has a base edge into class c
        # every conjugate x of such a g must have a neighbour in c
        need = ((K.T @ touches.astype(np.float32)) > 0)[ids]
        bad = np.argwhere(need & ~has_nbr)
        witness = None
        if len(bad):
            x, c = bad[0]
            witness = {"conjugate": G.label(int(x)), "class": G.label(int(np.flatnonzero(ids == c)[0]))}
        out.append(_compare(f"orbit:{graph_name(kind, RelKind.CONJUGACY)}", G.name, True, witness is None, witness))
    return out


# ---------------------------------------------------------------------------
# perfectness and clique structure


def check_perfectness(G: Group, hole_max_order: int = 48, hole_len: int = 11) -> list[VerificationReport]:
    out = []
    for name, pre, kind_rel in (
        ("CSPow", conjugacy_power_preorder(G), (GraphKind.POWER, RelKind.CONJUGACY)),
        ("OSPow", order_power_preorder(G), (GraphKind.POWER, RelKind.ORDER)),
    ):
        ok = pre.is_reflexive() and is_transitive(pre)
        out.append(_compare(f"preorder:{name}", G.name, True, ok))
        graph = build_graph(G, *kind_rel)
        eq, pair = graph_equal(comparability_graph(pre), graph.adj)
        out.append(_compare(f"comparability:{name}", G.name, True, eq, _pair_labels(G, pair)))
        if G.order <= hole_max_order:
            hole = find_odd_hole(graph, max_len=hole_len)
            out.append(_compare(f"no-odd-hole<={hole_len}:{name}", G.name, True, hole is None,
                                None if hole is None else [G.label(v) for v in hole]))
    return out


def check_clique_formulas(G: Group) -> list[VerificationReport]:
    out = []
    for name, kind, formula in (
        ("OSPow", GraphKind.POWER, clique_number_order_superpower),
        ("OSEPow", GraphKind.ENHANCED, clique_number_order_superenhanced),
    ):
        omega, witness = clique_number(build_graph(G, kind, RelKind.ORDER))
        out.append(_compare(f"clique-formula:{name}", G.name, formula(G), omega,
                            [G.label(v) for v in witness]))
    return out


def _fiber(G, m):
    return frozenset(np.flatnonzero(G.orders == m).tolist())


def check_clique_structure(G: Group) -> list[VerificationReport]:
    """Maximal cliques of OSPow / OSEPow are fiber unions; conjugacy ones sit in a class of cyclic subgroups."""
    out = []
    spec = spectrum(G)
    chains = {frozenset().union(*(_fiber(G, m) for m in c)) for c in maximal_chains(spec)}
    found = {c for c in maximal_cliques(build_graph(G, GraphKind.POWER, RelKind.ORDER))}
    out.append(_compare("maxcliques:OSPow", G.name, sorted(map(sorted, chains)), sorted(map(sorted, found))))
    # Recorded, not asserted: pairwise lcm-compatible orders such as {2, 3, 5}
    # with 6, 10, 15 present but 30 absent give a maximal clique with no single top.
    tops = {frozenset().union(*(_fiber(G, k) for k in spec.orders if m % k == 0)) for m in spec.maximal}
    found = {c for c in maximal_cliques(build_graph(G, GraphKind.ENHANCED, RelKind.ORDER))}
    extra = sorted(sorted({int(G.orders[v]) for v in c}) for c in found - tops)
    out.append(VerificationReport("maxcliques:OSEPow", G.name, None, not extra, REPORT,
                                  {"order_sets_without_top": extra} if extra else None))
    for kind in (GraphKind.POWER, GraphKind.ENHANCED):
        witness = None
        for clique in maximal_cliques(build_graph(G, kind, RelKind.CONJUGACY)):
            if not _inside_class_of_cyclic(G, clique):
                witness = [G.label(v) for v in sorted(clique)]
                break
        out.append(_compare(f"maxcliques:{graph_name(kind, RelKind.CONJUGACY)}-in-cyclic-class",
                            G.name, True, witness is None, witness))
    return out


def _inside_class_of_cyclic(G: Group, clique) -> bool:
    m = max(int(G.orders[v]) for v in clique)
    for z in sorted(clique):
        if G.orders[z] != m:
            continue
        union = set()
        for y in class_of(G, z).members:
            union |= cyclic_subgroup(G, y)
        if set(clique) <= union:
            return True
    return False


# ---------------------------------------------------------------------------
# induced subgraphs of order supergraphs


def _test_subgroups(G: Group):
    seen = set()
    subs = []
    candidates = [cyclic_subgroup(G, g) for g in range(G.order)]
    candidates += [centralizer(G, g) for g in range(G.order)]
    if G.factors:
        for i, f in enumerate(G.factors):
            parts = []
            for x in range(f.order):
                p = [0] * len(G.factors)
                p[i] = x
                parts.append(G.compose(p))
            candidates.append(frozenset(parts))
    for H in candidates:
        if 1 < len(H) < G.order and H not in seen:
            seen.add(H)
            subs.append(H)
    return sorted(subs, key=lambda H: (len(H), sorted(H)))


def check_induced_subgraph(G: Group) -> list[VerificationReport]:
    """Is OS-A(H) the induced subgraph of OS-A(G) on H? Predicted for POWER only."""
    out = []
    subs = _test_subgroups(G)
    for kind in GraphKind:
        full = build_graph(G, kind, RelKind.ORDER)
        witness = None
        for H in subs:
            sub, members = subgroup(G, H)
            eq, pair = graph_equal(build_graph(sub, kind, RelKind.ORDER).adj, full.induced(members))
            if not eq:
                witness = {"subgroup": [G.label(h) for h in members],
                           "pair": [G.label(members[pair[0]]), G.label(members[pair[1]])]}
                break
        name = f"induced-subgraph:{graph_name(kind, RelKind.ORDER)}"
        if kind is GraphKind.POWER:
            out.append(_compare(name, G.name, True, witness is None, witness))
        else:
            out.append(VerificationReport(name, G.name, None, witness is None, REPORT, witness))
    return out


# ---------------------------------------------------------------------------
# universality


def conj_super_adjacent(G, kind: GraphKind, g: int, h: int) -> bool:
    """Adjacency in the conjugacy supergraph by orbit query on the class of g."""
    return any(base_adjacent(G, kind, c, h) for c in class_of(G, g).members)


def _graph_id(n: int, edges) -> str:
    return f"n{n}:" + ",".join(f"{a}{b}" for a, b in sorted(edges))


def check_universality(n: int, edges) -> VerificationReport:
    w = embed_graph(n, edges)
    gid = _graph_id(n, w.edges)
    predicted = sorted([list(e) for e in w.edges])
    if not w.materializable:
        return VerificationReport("universality", gid, predicted, None, REPORT,
                                  {"status": "witness emitted, unverified", "primes": w.primes,
                                   "nonedges": [list(e) for e in w.nonedges]})
    G, xs = w.group, w.elements
    computed = {}
    for kind in (GraphKind.ENHANCED, GraphKind.COMMUTING):
        found = sorted([i, j] for i, j in itertools.combinations(range(n), 2)
                       if conj_super_adjacent(G, kind, xs[i], xs[j]))
        if G.is_table and G.order <= 2000:
            # materialized route must agree with the orbit queries
            adj = build_graph(G, kind, RelKind.CONJUGACY).induced(xs)
            dense = sorted([i, j] for i, j in itertools.combinations(range(n), 2) if adj[i, j])
            if dense != found:
                return VerificationReport("universality", gid, predicted, {"orbit": found, "dense": dense}, FAIL,
                                          {"kind": kind.value, "group_order": G.order})
        computed[graph_name(kind, RelKind.CONJUGACY)] = found
    ok = all(v == predicted for v in computed.values())
    return VerificationReport("universality", gid, predicted, computed, PASS if ok else FAIL,
                              None if ok else {"group_order": G.order, "primes": w.primes})


def small_graphs(max_n: int = 3):
    """Every labelled simple graph on 1..max_n vertices."""
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield n, [p for i, p in enumerate(pairs) if mask >> i & 1]


# ---------------------------------------------------------------------------
# one-off anchors


def check_s3_separation() -> list[VerificationReport]:
    G = get_group("S3")
    out = []
    for kind in GraphKind:
        out.append(_compare(f"S3-edges:{graph_name(kind, RelKind.EQUALITY)}", "S3", 6,
                            build_graph(G, kind, RelKind.EQUALITY).edge_count()))
    for rel in (RelKind.CONJUGACY, RelKind.ORDER):
        for kind in GraphKind:
            out.append(_compare(f"S3-edges:{graph_name(kind, rel)}", "S3", 9, build_graph(G, kind, rel).edge_count()))
    for kind in GraphKind:
        eq, pair = graph_equal(build_graph(G, kind, RelKind.EQUALITY), build_graph(G, kind, RelKind.CONJUGACY))
        out.append(_compare(f"S3-separates:{graph_name(kind, RelKind.EQUALITY)}!={graph_name(kind, RelKind.CONJUGACY)}",
                            "S3", False, eq))
    return out


def check_spectrum_of_power() -> list[VerificationReport]:
    A5 = get_group("A5")
    divisors = sorted(d for d in range(1, 31) if 30 % d == 0)
    return [
        _compare("spectrum-power:A5^3", "A5", divisors, sorted(spectrum_of_power(A5, 3).orders)),
        _compare("spectrum-power:30-not-in-A5^2", "A5", False, 30 in spectrum_of_power(A5, 2).orders),
    ]


# ---------------------------------------------------------------------------
# the eight graphs


EIGHT = [
    (GraphKind.POWER, RelKind.EQUALITY), (GraphKind.ENHANCED, RelKind.EQUALITY),
    (GraphKind.COMMUTING, RelKind.EQUALITY), (GraphKind.POWER, RelKind.CONJUGACY),
    (GraphKind.ENHANCED, RelKind.CONJUGACY), (GraphKind.COMMUTING, RelKind.CONJUGACY),
    (GraphKind.POWER, RelKind.ORDER), (GraphKind.COMMUTING, RelKind.ORDER),
]


def eight_distinct(G: Group):
    """Whether the eight graphs (OSEPow = OSCom merged) are pairwise different.

    Returns ``(all_distinct, matrix)`` where ``matrix[name1][name2]`` is a
    distinguishing pair of labels or ``None`` when the graphs coincide.
    """
    graphs = {graph_name(k, r): build_graph(G, k, r) for k, r in EIGHT}
    names = list(graphs)
    matrix = {a: {} for a in names}
    distinct = True
    for a, b in itertools.combinations(names, 2):
        eq, pair = graph_equal(graphs[a], graphs[b])
        matrix[a][b] = matrix[b][a] = None if eq else _pair_labels(G, pair)
        distinct &= not eq
    return distinct, matrix


def search_eight_distinct(entries=None):
    """First catalog group (catalog order) with eight distinct graphs, else None."""
    for e in entries if entries is not None else catalog():
        G = get_group(e.name)
        if not G.is_table:
            continue
        ok, matrix = eight_distinct(G)
        if ok:
            return e, matrix
    return None


def pair_equalities(G: Group) -> dict:
    """Which of the nine graphs coincide on G (data collection)."""
    graphs = {graph_name(k, r): build_graph(G, k, r) for r in RelKind for k in GraphKind}
    equal = [[a, b] for a, b in itertools.combinations(graphs, 2) if graph_equal(graphs[a], graphs[b])[0]]
    return {"group": G.name, "order": G.order, "equal_pairs": equal}


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class Theorem:
    id: str
    max_order: int
    run: object
    per_group: bool = True


THEOREMS = [
    Theorem("osepow-oscom", 200, lambda G: [check_osepow_eq_oscom(G)]),
    Theorem("completeness", 200, check_completeness_table),
    Theorem("dominant", 200, check_dominant),
    Theorem("equalities", 200, check_equalities),
    Theorem("orbit", 100, check_orbit_prop),
    Theorem("perfectness", 200, check_perfectness),
    Theorem("clique-formula", 100, check_clique_formulas),
    Theorem("clique-structure", 64, check_clique_structure),
    Theorem("induced-subgraph", 64, check_induced_subgraph),
    Theorem("universality", 0, None, per_group=False),
    Theorem("s3-separation", 0, None, per_group=False),
    Theorem("spectrum-power", 0, None, per_group=False),
]
THEOREM_IDS = [t.id for t in THEOREMS]


def _global_reports(tid: str) -> list[VerificationReport]:
    if tid == "universality":
        return [check_universality(n, edges) for n, edges in small_graphs(3)]
    if tid == "s3-separation":
        return check_s3_separation()
    if tid == "spectrum-power":
        return check_spectrum_of_power()
    raise KeyError(tid)


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("SUPERGRAPH_THREADS", "1")))
    except ValueError:
        return 1


def run_verification(max_order: int = 200, theorems=None, threads: int | None = None) -> list[VerificationReport]:
    """All selected checks, ordered by theorem then catalog order."""
    selected = [t for t in THEOREMS if theorems is None or t.id in theorems]
    unknown = set(theorems or ()) - set(THEOREM_IDS)
    if unknown:
        raise KeyError(f"unknown theorem ids: {sorted(unknown)}")
    entries = [e for e in catalog(max_order)]

    def per_group(entry: CatalogEntry):
        G = get_group(entry.name)
        out = {}
        for t in selected:
            if t.per_group and G.order <= t.max_order:
                start = time.perf_counter()
                reps = t.run(G)
                dt = time.perf_counter() - start
                for r in reps:
                    r.runtime = dt / max(1, len(reps))
                out[t.id] = reps
        return out

    threads = threads or thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(per_group, entries))
    else:
        results = [per_group(e) for e in entries]

    reports: list[VerificationReport] = []
    for t in selected:
        if t.per_group:
            for res in results:
                reports.extend(res.get(t.id, []))
        else:
            start = time.perf_counter()
            reps = _global_reports(t.id)
            dt = time.perf_counter() - start
            for r in reps:
                r.runtime = dt / max(1, len(reps))
            reports.extend(reps)
    return reports


def summarize(reports) -> dict:
    table: dict[str, dict[str, int]] = {}
    for r in reports:
        key = r.theorem.split(":")[0]
        row = table.setdefault(key, {PASS: 0, FAIL: 0, REPORT: 0})
        row[r.verdict] += 1
    return table


def format_summary(reports) -> str:
    table = summarize(reports)
    width = max([len(k) for k in table] + [7])
    lines = [f"{'theorem':<{width}}  {'pass':>6} {'fail':>6} {'report':>6}"]
    for k, row in table.items():
        lines.append(f"{k:<{width}}  {row[PASS]:>6} {row[FAIL]:>6} {row[REPORT]:>6}")
    total_fail = sum(row[FAIL] for row in table.values())
    lines.append(f"failures: {total_fail}")
    return "\n".join(lines)
