"""Constructors for the group families used in the verification sweeps."""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .group import TABLE_LIMIT, DirectProduct, Group, GroupError, prime_factors


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def cyclic(n: int) -> Group:
    if n < 1:
        raise GroupError("cyclic(n) needs n >= 1")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return Group(table, name=f"C{n}", labels=[f"g^{i}" if i else "e" for i in range(n)])


def dihedral(n: int) -> Group:
    """Symmetries of the n-gon, order 2n; elements r^i s^j with s r = r^-1 s."""
    if n < 1:
        raise GroupError("dihedral(n) needs n >= 1")
    elements = [(i, j) for j in (0, 1) for i in range(n)]

    def mul(x, y):
        (i, j), (k, l) = x, y
        return ((i + (-k if j else k)) % n, (j + l) % 2)

    def label(x):
        i, j = x
        r = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
        s = "s" if j else ""
        return (r + s) or "e"

    return Group.from_elements(elements, mul, name=f"D{n}", label=label)


def _perm_label(p) -> str:
    seen, cycles = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = p[j]
        cycles.append("(" + "".join(map(str, cyc)) + ")")
    return "".join(cycles) or "e"


def _perm_parity(p) -> int:
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            inv += p[i] > p[j]
    return inv % 2


def symmetric(n: int) -> Group:
    if not 1 <= n <= 6:
        raise GroupError("symmetric(n) supported for 1 <= n <= 6")
    elements = list(itertools.permutations(range(n)))

    def mul(p, q):
        return tuple(q[p[i]] for i in range(n))

    return Group.from_elements(elements, mul, name=f"S{n}", label=_perm_label)


def alternating(n: int) -> Group:
    if not 1 <= n <= 7:
        raise GroupError("alternating(n) supported for 1 <= n <= 7")
    elements = [p for p in itertools.permutations(range(n)) if _perm_parity(p) == 0]

    def mul(p, q):
        return tuple(q[p[i]] for i in range(n))

    return Group.from_elements(elements, mul, name=f"A{n}", label=_perm_label)


def elementary_abelian(p: int, k: int) -> Group:
    if not is_prime(p) or k < 1:
        raise GroupError("elementary_abelian(p, k) needs p prime and k >= 1")
    if p**k > TABLE_LIMIT:
        raise GroupError("elementary abelian group too large for a table")
    elements = list(itertools.product(range(p), repeat=k))

    def mul(x, y):
        return tuple((a + b) % p for a, b in zip(x, y))

    return Group.from_elements(elements, mul, name=f"C{p}^{k}", label=lambda x: "".join(map(str, x)))


def generalized_quaternion(k: int) -> Group:
    """Q_{2^k}: a^i b^j with a^(2^(k-1)) = e, b^2 = a^(2^(k-2)), b^-1 a b = a^-1."""
    if k < 3:
        raise GroupError("generalized_quaternion(k) needs k >= 3")
    N = 2 ** (k - 1)
    elements = [(i, j) for j in (0, 1) for i in range(N)]

    def mul(x, y):
        (i, j), (m, l) = x, y
        if j == 0:
            return ((i + m) % N, l)
        # a^i b a^m b^l = a^(i-m) b^(1+l)
        if l == 0:
            return ((i - m) % N, 1)
        return ((i - m + N // 2) % N, 0)

    def label(x):
        i, j = x
        a = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
        return (a + ("b" if j else "")) or "e"

    return Group.from_elements(elements, mul, name=f"Q{2**k}", label=label)


def _least_root_of_order(p: int, q: int) -> int:
    for r in range(2, q):
        if pow(r, p, q) == 1:
            return r
    raise GroupError(f"no element of order {p} mod {q}")


def nonabelian_pq(p: int, q: int) -> Group:
    """Non-abelian semidirect product C_q : C_p, needs p | q - 1."""
    if not (is_prime(p) and is_prime(q)) or (q - 1) % p:
        raise GroupError(f"nonabelian_pq needs primes with p | q-1, got ({p}, {q})")
    r = _least_root_of_order(p, q)
    rpow = [pow(r, b, q) for b in range(p)]
    elements = [(a, b) for b in range(p) for a in range(q)]

    def mul(x, y):
        (a, b), (a2, b2) = x, y
        return ((a + rpow[b] * a2) % q, (b + b2) % p)

    return Group.from_elements(elements, mul, name=f"C{q}:C{p}", label=lambda x: f"({x[0]},{x[1]})")


def pq_element(p: int, q: int, a: int, b: int) -> int:
    """Index of (a, b) in :func:`nonabelian_pq`'s element order."""
    return b * q + a


def heisenberg(p: int) -> Group:
    """Upper unitriangular 3x3 matrices over Z/p, for odd p."""
    if not is_prime(p) or p == 2:
        raise GroupError("heisenberg(p) needs an odd prime")
    elements = list(itertools.product(range(p), repeat=3))

    def mul(x, y):
        a, b, c = x
        a2, b2, c2 = y
        return ((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)

    return Group.from_elements(elements, mul, name=f"Heis{p}", label=lambda x: "".join(map(str, x)))


def direct_product(*groups: Group, name: str | None = None):
    """Direct product; a table group up to order 4096, a composite view above."""
    if not groups:
        raise GroupError("direct_product needs factors")
    name = name or "x".join(g.name for g in groups)
    order = math.prod(g.order for g in groups)
    if order > TABLE_LIMIT:
        return DirectProduct(groups, name=name)
    table = np.zeros((1, 1), dtype=np.int64)
    for g in groups:
        m = g.order
        t = g.table.astype(np.int64)
        n = table.shape[0]
        table = (table[:, None, :, None] * m + t[None, :, None, :]).reshape(n * m, n * m)
    labels = ["(" + ",".join(p) + ")" for p in itertools.product(*[[g.label(i) for i in range(g.order)] for g in groups])]
    return Group(table, name=name, labels=labels, factors=groups)


# ---------------------------------------------------------------------------
# prime chains and the embedding witness


def prime_chain(n: int) -> list[int]:
    """2, then repeatedly the least prime congruent to 1 mod the lcm so far."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 6:
        raise ValueError("prime_chain supported for n <= 6")
    chain = [2]
    while len(chain) < n:
        m = math.lcm(*chain)
        k = 1
        while not is_prime(k * m + 1):
            k += 1
        chain.append(k * m + 1)
    return chain


@dataclass
class EmbeddingWitness:
    """A group with designated elements x_k whose induced subgraph is the target."""

    n: int
    edges: frozenset
    primes: list[int]
    factors: list
    nonedges: list
    group: object
    elements: list[int]
    materializable: bool

    @property
    def order(self) -> int:
        return self.group.order


def _normalize_edges(n: int, edges) -> frozenset:
    out = set()
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"bad edge {(u, v)} for {n} vertices")
        out.add((min(u, v), max(u, v)))
    return frozenset(out)


def embed_graph(n: int, edges, max_factors: int = 3, max_order: int = 100_000) -> EmbeddingWitness:
    """Witness group for the conjugacy supercommuting / superenhanced embedding.

    Vertices are ``0..n-1``; vertex k gets the k-th prime of :func:`prime_chain`.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    edges = _normalize_edges(n, edges)
    primes = prime_chain(n)
    nonedges = [(i, j) for i, j in itertools.combinations(range(n), 2) if (i, j) not in edges]
    order_est = math.prod(primes) ** max(1, len(nonedges))
    materializable = len(nonedges) <= max_factors and order_est <= max_order
    if not nonedges:
        factors = [cyclic(p) for p in primes]
        group = direct_product(*factors) if materializable else None
        elements = []
        if group is not None:
            for k in range(n):
                parts = [0] * n
                parts[k] = 1
                elements.append(group.compose(parts))
        return EmbeddingWitness(n, edges, primes, factors, [], group, elements, materializable)

    factors, per_factor = [], []
    for i, j in nonedges:
        p, q = primes[i], primes[j]
        others = [k for k in range(n) if k not in (i, j)]
        if not materializable:
            factors.append(("nonabelian_pq", p, q, [primes[k] for k in others]))
            continue
        G_ij = direct_product(nonabelian_pq(p, q), *[cyclic(primes[k]) for k in others])
        xs = []
        for k in range(n):
            parts = [0] * (1 + len(others))
            if k == i:
                parts[0] = pq_element(p, q, 0, 1)
            elif k == j:
                parts[0] = pq_element(p, q, 1, 0)
            else:
                parts[1 + others.index(k)] = 1
            xs.append(G_ij.compose(parts))
        factors.append(G_ij)
        per_factor.append(xs)
    if not materializable:
        return EmbeddingWitness(n, edges, primes, factors, nonedges, None, [], False)
    if len(factors) == 1:
        group = factors[0]
        elements = per_factor[0]
    else:
        group = direct_product(*factors, name="x".join(f"G{i}{j}" for i, j in nonedges))
        elements = [group.compose([xs[k] for xs in per_factor]) for k in range(n)]
    return EmbeddingWitness(n, edges, primes, factors, nonedges, group, elements, True)


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    order: int
    constructor: str
    params: tuple
    predicted: dict = field(default_factory=dict, compare=False)

    def build(self):
        return get_group(self.name)

    def as_dict(self) -> dict:
        return {"name": self.name, "order": self.order, "constructor": self.constructor,
                "params": list(self.params), "predicted": self.predicted}


def _prime_power(n: int) -> bool:
    return len(prime_factors(n)) <= 1


def _base_entries() -> list[CatalogEntry]:
    out = []
    for n in range(1, 65):
        out.append(CatalogEntry(f"C{n}", n, "cyclic", (n,),
                                {"abelian": True, "cyclic": True, "dedekind": True, "p_group": _prime_power(n)}))
    for n in range(3, 33):
        out.append(CatalogEntry(f"D{n}", 2 * n, "dihedral", (n,),
                                {"abelian": False, "cyclic": False, "dedekind": False, "p_group": _prime_power(2 * n)}))
    for k in (3, 4, 5):
        out.append(CatalogEntry(f"Q{2**k}", 2**k, "generalized_quaternion", (k,),
                                {"abelian": False, "cyclic": False, "dedekind": k == 3, "p_group": True}))
    for n in (3, 4, 5):
        out.append(CatalogEntry(f"S{n}", math.factorial(n), "symmetric", (n,),
                                {"abelian": False, "cyclic": False, "dedekind": False, "p_group": False}))
    for n in (4, 5):
        out.append(CatalogEntry(f"A{n}", math.factorial(n) // 2, "alternating", (n,),
                                {"abelian": False, "cyclic": False, "dedekind": False, "p_group": False}))
    for p, k in ((2, 2), (2, 3), (3, 2), (3, 3)):
        out.append(CatalogEntry(f"C{p}^{k}", p**k, "elementary_abelian", (p, k),
                                {"abelian": True, "cyclic": False, "dedekind": True, "p_group": True}))
    out.append(CatalogEntry("Heis3", 27, "heisenberg", (3,),
                            {"abelian": False, "cyclic": False, "dedekind": False, "p_group": True}))
    for p, q in ((2, 3), (2, 5), (3, 7), (2, 7)):
        out.append(CatalogEntry(f"C{q}:C{p}", p * q, "nonabelian_pq", (p, q),
                                {"abelian": False, "cyclic": False, "dedekind": False, "p_group": False}))
    return out


# Seeds for pairwise direct products; chosen to hit every group class the
# theorems separate (non-EPPO, C_p x C_p, Dedekind non-abelian, 2-Engel ...).
_PRODUCT_SEEDS = ["C2", "C3", "C4", "C5", "C2^2", "S3", "D4", "Q8", "D5", "A4", "C7:C3",
                  "Heis3", "Q16", "D6", "C3^2", "S4"]


def _product_entries(base: dict) -> list[CatalogEntry]:
    out = []
    for a, b in itertools.combinations_with_replacement(_PRODUCT_SEEDS, 2):
        A, B = base[a], base[b]
        if A.order * B.order > 200:
            continue
        pa, pb = A.predicted, B.predicted
        abelian = pa["abelian"] and pb["abelian"]
        same_p = pa["p_group"] and pb["p_group"] and set(prime_factors(A.order)) == set(prime_factors(B.order))
        pred = {"abelian": abelian, "p_group": bool(same_p)}
        if not abelian:
            pred["cyclic"] = False
        out.append(CatalogEntry(f"{a}x{b}", A.order * B.order, "direct_product", (a, b), pred))
    return out


@lru_cache(maxsize=None)
def catalog_entries() -> tuple[CatalogEntry, ...]:
    base = _base_entries()
    by_name = {e.name: e for e in base}
    extra = _product_entries(by_name)
    # extra products that are not seed pairs
    for a, b in (("C2", "C4"), ("C2", "Q8"), ("S3", "C2")):
        if not any(e.params in ((a, b), (b, a)) for e in extra):
            A, B = by_name[a], by_name[b]
            extra.append(CatalogEntry(f"{a}x{b}", A.order * B.order, "direct_product", (a, b),
                                      {"abelian": A.predicted["abelian"] and B.predicted["abelian"]}))
    entries = base + extra
    entries.sort(key=lambda e: (e.order, e.name))
    return tuple(entries)


def catalog(max_order: int | None = None, pattern: str | None = None) -> list[CatalogEntry]:
    out = []
    for e in catalog_entries():
        if max_order is not None and e.order > max_order:
            continue
        if pattern and pattern not in e.name:
            continue
        out.append(e)
    return out


_FAMILY = [
    (re.compile(r"C(\d+)\^(\d+)"), lambda m: elementary_abelian(int(m[1]), int(m[2]))),
    (re.compile(r"C(\d+):C(\d+)"), lambda m: nonabelian_pq(int(m[2]), int(m[1]))),
    (re.compile(r"C(\d+)"), lambda m: cyclic(int(m[1]))),
    (re.compile(r"D(\d+)"), lambda m: dihedral(int(m[1]))),
    (re.compile(r"Q(\d+)"), lambda m: _quaternion_by_order(int(m[1]))),
    (re.compile(r"S(\d+)"), lambda m: symmetric(int(m[1]))),
    (re.compile(r"A(\d+)"), lambda m: alternating(int(m[1]))),
    (re.compile(r"Heis(\d+)"), lambda m: heisenberg(int(m[1]))),
]


def _quaternion_by_order(n: int) -> Group:
    k = n.bit_length() - 1
    if 2**k != n:
        raise GroupError(f"Q{n}: order must be a power of two")
    return generalized_quaternion(k)


@lru_cache(maxsize=256)
def get_group(name: str):
    """Construct a group from an id such as ``S3``, ``C7:C3`` or ``D4xC3``."""
    parts = name.split("x")
    if len(parts) > 1:
        return direct_product(*(get_group(p) for p in parts), name=name)
    for pattern, build in _FAMILY:
        m = pattern.fullmatch(name)
        if m:
            return build(m)
    raise GroupError(f"unknown group id {name!r}")
