"""The nine B-superA graphs on a group.

A graph type A (power, enhanced power, commuting) and an equivalence relation
B (equality, conjugacy, same order) give the graph joining g and h when some
g' ~ g and h' ~ h are A-adjacent. Each B-class induces a clique unless the
class-clique convention is switched off.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

import numpy as np

from .group import ALL_PAIRS_CAP, AnyGroup, Group, GroupError, class_ids, conjugacy_classes, subgroup_closure


class GraphKind(str, enum.Enum):
    POWER = "power"
    ENHANCED = "enhanced"
    COMMUTING = "commuting"


class RelKind(str, enum.Enum):
    EQUALITY = "eq"
    CONJUGACY = "conj"
    ORDER = "order"


KIND_ABBREV = {GraphKind.POWER: "Pow", GraphKind.ENHANCED: "EPow", GraphKind.COMMUTING: "Com"}
REL_ABBREV = {RelKind.EQUALITY: "", RelKind.CONJUGACY: "CS", RelKind.ORDER: "OS"}


def graph_name(kind: GraphKind, rel: RelKind) -> str:
    """Short names in the Pow / CSPow / OSPow style."""
    return REL_ABBREV[RelKind(rel)] + KIND_ABBREV[GraphKind(kind)]


def base_adjacent(G: AnyGroup, kind: GraphKind, g: int, h: int) -> bool:
    """Adjacency in the base graph straight from its definition."""
    kind = GraphKind(kind)
    if kind is GraphKind.COMMUTING:
        return G.commutes(g, h)
    if kind is GraphKind.POWER:
        return _in_cyclic(G, g, h) or _in_cyclic(G, h, g)
    if not G.commutes(g, h):
        return False
    closure = subgroup_closure(G, (g, h))
    size = len(closure)
    return any(G.element_order(z) == size for z in closure)


def _in_cyclic(G: AnyGroup, x: int, z: int) -> bool:
    """x in <z>"""
    y = z
    for _ in range(G.element_order(z)):
        if y == x:
            return True
        y = G.mul(y, z)
    return False


def equivalence_classes(G: AnyGroup, rel: RelKind, cap: int | None = None) -> list[list[int]]:
    rel = RelKind(rel)
    if rel is RelKind.EQUALITY:
        return [[g] for g in G.elements()]
    if rel is RelKind.CONJUGACY:
        return [list(c.members) for c in conjugacy_classes(G, cap)]
    fibers: dict[int, list[int]] = {}
    for g in G.elements():
        fibers.setdefault(G.element_order(g), []).append(g)
    return [fibers[k] for k in sorted(fibers)]


def _relation_ids(G: Group, rel: RelKind, cap: int | None) -> np.ndarray:
    if rel is RelKind.EQUALITY:
        return np.arange(G.order)
    if rel is RelKind.CONJUGACY:
        return class_ids(G, cap)
    _, ids = np.unique(G.orders, return_inverse=True)
    return ids.ravel()


def base_adjacency(G: Group, kind: GraphKind) -> np.ndarray:
    """Base graph as a boolean matrix with loops (every element is self-adjacent)."""
    key = ("base", GraphKind(kind))
    if key in G._cache:
        return G._cache[key]
    kind = GraphKind(kind)
    if kind is GraphKind.COMMUTING:
        adj = G.table == G.table.T
    elif kind is GraphKind.POWER:
        m = G.cyclic_membership
        adj = m | m.T
    else:
        # g ~ h iff both lie in one cyclic subgroup <z>; maximal <z> suffice
        m = _distinct_cyclic_rows(G)
        mf = m.astype(np.float32)
        adj = (mf.T @ mf) > 0
    adj.setflags(write=False)
    G._cache[key] = adj
    return adj


def _distinct_cyclic_rows(G: Group) -> np.ndarray:
    """Membership rows of the maximal cyclic subgroups."""
    m = G.cyclic_membership
    o = G.orders
    # z is non-maximal if some w of larger order has z in <w>
    dominated = (m & (o[:, None] > o[None, :])).any(axis=0)
    return np.unique(m[~dominated], axis=0)


@dataclass(frozen=True)
class SuperGraph:
    group: str
    kind: GraphKind
    rel: RelKind
    adj: np.ndarray = field(repr=False, compare=False)
    orders: np.ndarray = field(repr=False, compare=False)
    classes: np.ndarray = field(repr=False, compare=False)
    labels: tuple = field(repr=False, compare=False, default=())
    convention: bool = True

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    @property
    def name(self) -> str:
        return graph_name(self.kind, self.rel)

    def edge_count(self) -> int:
        return int(np.triu(self.adj, 1).sum())

    def edges(self) -> list[tuple[int, int]]:
        return [(int(a), int(b)) for a, b in np.argwhere(np.triu(self.adj, 1))]

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    def induced(self, vertices) -> np.ndarray:
        v = np.asarray(list(vertices))
        return self.adj[np.ix_(v, v)]

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "graph": self.name,
            "kind": self.kind.value,
            "rel": self.rel.value,
            "convention": self.convention,
            "vertices": [
                {"id": i, "label": self.labels[i] if self.labels else str(i),
                 "order": int(self.orders[i]), "class": int(self.classes[i])}
                for i in range(self.n)
            ],
            "adjacency": {str(i): np.flatnonzero(self.adj[i]).tolist() for i in range(self.n)},
        }

    def to_dot(self) -> str:
        lines = [f'graph "{self.name}({self.group})" {{']
        for i in range(self.n):
            lab = self.labels[i] if self.labels else str(i)
            lines.append(f'  {i} [label="{i}:{lab} o={int(self.orders[i])} c={int(self.classes[i])}"];')
        for a, b in self.edges():
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(
    G: Group,
    kind: GraphKind,
    rel: RelKind,
    convention: bool = True,
    cap: int | None = None,
) -> SuperGraph:
    """Build the B-superA graph as a symmetric boolean matrix with empty diagonal."""
    kind, rel = GraphKind(kind), RelKind(rel)
    cap = ALL_PAIRS_CAP if cap is None else cap
    if G.order > cap:
        raise GroupError(f"{G.name}: order {G.order} exceeds graph cap {cap}")
    if not G.is_table:
        raise GroupError("graph construction needs a table-backed group")
    key = ("graph", kind, rel, convention)
    if key in G._cache:
        return G._cache[key]
    n = G.order
    ids = _relation_ids(G, rel, cap)
    if rel is RelKind.ORDER and kind is GraphKind.POWER and convention:
        o = G.orders
        adj = (o[:, None] % o[None, :] == 0) | (o[None, :] % o[:, None] == 0)
    elif rel is RelKind.EQUALITY:
        adj = base_adjacency(G, kind).copy()
    else:
        base = base_adjacency(G, kind).copy()
        if not convention:
            np.fill_diagonal(base, False)
        k = ids.max() + 1
        K = np.zeros((n, k), dtype=np.float32)
        K[np.arange(n), ids] = 1.0
        quotient = (K.T @ base.astype(np.float32) @ K) > 0
        if convention:
            np.fill_diagonal(quotient, True)
        # without the convention, quotient[c, c] already means "two distinct
        # members of c are adjacent", since the base loops were removed
        adj = quotient[ids][:, ids]
    adj = np.array(adj, dtype=bool)
    np.fill_diagonal(adj, False)
    adj.setflags(write=False)
    labels = tuple(G.labels) if G.labels else ()
    graph = SuperGraph(G.name, kind, rel, adj, np.asarray(G.orders), class_ids(G, cap), labels, convention)
    G._cache[key] = graph
    return graph


def build_graph_naive(G: Group, kind: GraphKind, rel: RelKind, convention: bool = True) -> np.ndarray:
    """Definition-level construction, O(n^2 * class sizes); for cross-checks on small groups."""
    classes = equivalence_classes(G, rel)
    where = {}
    for c in classes:
        for g in c:
            where[g] = c
    n = G.order
    adj = np.zeros((n, n), dtype=bool)
    for g in range(n):
        for h in range(g + 1, n):
            cg, ch = where[g], where[h]
            if cg is ch and convention:
                hit = True
            else:
                hit = any(a != b and base_adjacent(G, kind, a, b) for a in cg for b in ch)
            adj[g, h] = adj[h, g] = hit
    return adj


def all_graphs(G: Group, convention: bool = True) -> dict[str, SuperGraph]:
    return {
        graph_name(k, r): build_graph(G, k, r, convention)
        for r in RelKind
        for k in GraphKind
    }


def graph_to_json_text(graph: SuperGraph) -> str:
    return json.dumps(graph.to_json())
