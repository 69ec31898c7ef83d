"""Graph parameters: completeness, dominant vertices, cliques, chains, preorders, holes.

Functions take either a :class:`SuperGraph` or a square boolean adjacency
matrix. Bitset searches use Python ints, one bit per vertex.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass

import numpy as np

from .group import Group, Spectrum, class_ids, spectrum
from .supergraph import GraphKind, RelKind, SuperGraph, build_graph

CLIQUE_CAP = 2000
HOLE_VERTEX_CAP = 128
HOLE_LENGTH_CAP = 13


def as_adjacency(graph) -> np.ndarray:
    adj = graph.adj if isinstance(graph, SuperGraph) else np.asarray(graph, dtype=bool)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
        raise ValueError("adjacency must be square")
    return adj


def _bitsets(adj: np.ndarray, order=None) -> list[int]:
    n = adj.shape[0]
    order = list(range(n)) if order is None else list(order)
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for v in order:
        mask = 0
        for u in np.flatnonzero(adj[v]).tolist():
            if u != v:
                mask |= 1 << pos[u]
        out.append(mask)
    return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_complete(graph) -> bool:
    adj = as_adjacency(graph)
    n = adj.shape[0]
    return int(adj.sum()) == n * (n - 1)


def dominant_vertices(graph) -> frozenset:
    adj = as_adjacency(graph)
    return frozenset(np.flatnonzero(adj.sum(axis=1) == adj.shape[0] - 1).tolist())


def graph_equal(g1, g2):
    """``(True, None)`` or ``(False, (u, v))`` with the first differing pair."""
    if isinstance(g1, SuperGraph) and isinstance(g2, SuperGraph) and g1.group != g2.group:
        raise ValueError(f"graphs on different groups: {g1.group} vs {g2.group}")
    a, b = as_adjacency(g1), as_adjacency(g2)
    if a.shape != b.shape:
        raise ValueError(f"vertex counts differ: {a.shape[0]} vs {b.shape[0]}")
    diff = np.argwhere(np.triu(a != b, 1))
    if len(diff) == 0:
        return True, None
    return False, (int(diff[0][0]), int(diff[0][1]))


# ---------------------------------------------------------------------------
# cliques


def _degeneracy_order(adj: np.ndarray) -> list[int]:
    """Vertices so that each has few neighbours later; ties by index."""
    n = adj.shape[0]
    deg = adj.sum(axis=1).astype(int) - adj.diagonal().astype(int)
    removed = np.zeros(n, dtype=bool)
    peel = []
    for _ in range(n):
        cand = np.where(removed, n + 1, deg)
        v = int(np.argmin(cand))
        peel.append(v)
        removed[v] = True
        deg -= adj[v].astype(int)
    # search the densest core first
    return peel[::-1]


def clique_number(graph, cap: int = CLIQUE_CAP) -> tuple[int, list[int]]:
    """Exact maximum clique by branch and bound with greedy colouring bounds."""
    adj = as_adjacency(graph)
    n = adj.shape[0]
    if n > cap:
        raise ValueError(f"{n} vertices exceeds clique cap {cap}")
    if n == 0:
        return 0, []
    order = _degeneracy_order(adj)
    nbr = _bitsets(adj, order)
    best: list[int] = []

    def colour(P: int):
        out = []
        k = 0
        U = P
        while U:
            k += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= ~nbr[v] & ~low
                U &= ~low
                out.append((v, k))
        return out

    def expand(R: list[int], P: int):
        nonlocal best
        for v, k in reversed(colour(P)):
            if len(R) + k <= len(best):
                return
            R.append(v)
            newP = P & nbr[v]
            if newP:
                expand(R, newP)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, n + 200))
    try:
        expand([], (1 << n) - 1)
    finally:
        sys.setrecursionlimit(limit)
    witness = sorted(order[i] for i in best)
    return len(witness), witness


@dataclass
class MaximalCliques:
    cliques: list
    truncated: bool

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)


def maximal_cliques(graph, cap: int = 10_000) -> MaximalCliques:
    """Bron-Kerbosch with Tomita pivoting; stops after ``cap`` cliques."""
    adj = as_adjacency(graph)
    n = adj.shape[0]
    nbr = _bitsets(adj)
    found: list[frozenset] = []
    truncated = False

    def bk(R: int, P: int, X: int):
        nonlocal truncated
        if truncated:
            return
        if not P and not X:
            if len(found) >= cap:
                truncated = True
                return
            found.append(frozenset(_bits(R)))
            return
        pivot = max(_bits(P | X), key=lambda u: (bin(P & nbr[u]).count("1"), -u))
        for v in list(_bits(P & ~nbr[pivot])):
            bk(R | (1 << v), P & nbr[v], X & nbr[v])
            P &= ~(1 << v)
            X |= 1 << v

    if n:
        bk(0, (1 << n) - 1, 0)
    found.sort(key=lambda c: (sorted(c)))
    return MaximalCliques(found, truncated)


# ---------------------------------------------------------------------------
# divisor chains and clique formulas


def _smallest_prime_divisors(k: int) -> list[int]:
    out, p = [], 2
    while p * p <= k:
        if k % p == 0:
            out.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        out.append(k)
    return out


def maximal_chains(spec: Spectrum) -> list[tuple[int, ...]]:
    """Chains 1 = m1 | m2 | ... with prime steps inside the spectrum, top maximal."""
    orders = spec.orders
    primes = sorted({p for k in orders for p in _smallest_prime_divisors(k)})
    chains = []

    def walk(chain):
        top = chain[-1]
        if top in spec.maximal:
            chains.append(tuple(chain))
            return
        for p in primes:
            if top * p in orders:
                walk(chain + [top * p])

    walk([1])
    return sorted(chains)


def _fiber_sizes(G: Group) -> dict[int, int]:
    ks, counts = np.unique(G.orders, return_counts=True)
    return {int(k): int(c) for k, c in zip(ks, counts)}


def clique_number_order_superpower(G: Group) -> int:
    fiber = _fiber_sizes(G)
    return max(sum(fiber[m] for m in chain) for chain in maximal_chains(spectrum(G)))


def clique_number_order_superenhanced(G: Group) -> int:
    fiber = _fiber_sizes(G)
    return max(sum(c for k, c in fiber.items() if m % k == 0) for m in spectrum(G).maximal)


# ---------------------------------------------------------------------------
# preorders and comparability


@dataclass
class Preorder:
    relation: np.ndarray

    @property
    def n(self) -> int:
        return self.relation.shape[0]

    def is_reflexive(self) -> bool:
        return bool(self.relation.diagonal().all())


def is_transitive(P: Preorder) -> bool:
    r = P.relation.astype(np.float32)
    composed = (r @ r) > 0
    return bool(np.array_equal(composed | P.relation, P.relation))


def conjugacy_power_preorder(G: Group) -> Preorder:
    """Arc x -> y when some conjugate of y is a power of x."""
    ids = class_ids(G)
    K = np.zeros((G.order, ids.max() + 1), dtype=np.float32)
    K[np.arange(G.order), ids] = 1.0
    hits = (G.cyclic_membership.astype(np.float32) @ K) > 0
    rel = hits[:, ids]
    np.fill_diagonal(rel, True)
    return Preorder(rel)


def order_power_preorder(G: Group) -> Preorder:
    """Arc x -> y when o(y) divides o(x)."""
    o = G.orders
    rel = (o[:, None] % o[None, :]) == 0
    return Preorder(rel)


def comparability_graph(P: Preorder) -> np.ndarray:
    adj = P.relation | P.relation.T
    adj = adj.copy()
    np.fill_diagonal(adj, False)
    return adj


# ---------------------------------------------------------------------------
# odd holes


def find_odd_hole(graph, max_len: int = 11, min_len: int = 5):
    """Some chordless odd cycle with length in [min_len, max_len], or None.

    Exhaustive over induced paths rooted at their least vertex, so ``None``
    proves absence within the length range only.
    """
    adj = as_adjacency(graph)
    n = adj.shape[0]
    if n > HOLE_VERTEX_CAP:
        raise ValueError(f"{n} vertices exceeds hole-search cap {HOLE_VERTEX_CAP}")
    if max_len > HOLE_LENGTH_CAP:
        raise ValueError(f"max_len {max_len} exceeds cap {HOLE_LENGTH_CAP}")
    nbr = _bitsets(adj)
    closed = [m | (1 << v) for v, m in enumerate(nbr)]

    def extend(path, used, blocked, start_nbrs):
        last = path[-1]
        cand = nbr[last] & ~blocked & ~used & above
        for w in _bits(cand):
            if start_nbrs >> w & 1:
                length = len(path) + 1
                if length >= min_len and length % 2 == 1:
                    return path + [w]
                continue
            if len(path) + 1 < max_len:
                hit = extend(path + [w], used | (1 << w), blocked | closed[last], start_nbrs)
                if hit:
                    return hit
        return None

    for v in range(n):
        above = ((1 << n) - 1) & ~((1 << (v + 1)) - 1)
        for u in _bits(nbr[v] & above):
            hit = extend([v, u], (1 << v) | (1 << u), 0, nbr[v])
            if hit:
                return hit
    return None


def is_induced_cycle(adj: np.ndarray, cycle) -> bool:
    k = len(cycle)
    for i in range(k):
        for j in range(i + 1, k):
            should = (j - i == 1) or (i == 0 and j == k - 1)
            if bool(adj[cycle[i], cycle[j]]) != should:
                return False
    return True


# ---------------------------------------------------------------------------
# summaries


def analyze_graph(graph: SuperGraph, clique_cap: int = CLIQUE_CAP, max_cliques: int = 1000) -> dict:
    out = {
        "group": graph.group,
        "graph": graph.name,
        "kind": graph.kind.value,
        "rel": graph.rel.value,
        "convention": graph.convention,
        "vertices": graph.n,
        "edges": graph.edge_count(),
        "complete": is_complete(graph),
        "dominant": sorted(dominant_vertices(graph)),
    }
    if graph.n <= clique_cap:
        omega, witness = clique_number(graph, cap=clique_cap)
        out["clique_number"] = omega
        out["clique_witness"] = witness
        mc = maximal_cliques(graph, cap=max_cliques)
        out["maximal_cliques"] = len(mc)
        out["maximal_cliques_truncated"] = mc.truncated
    return out


def build_and_analyze(G: Group, kind: GraphKind, rel: RelKind, **kw) -> dict:
    return analyze_graph(build_graph(G, kind, rel), **kw)
