"""Finite groups on index sets.

Two backings share one interface:

* :class:`Group` holds a dense Cayley table (numpy ``int32``) and is what every
  graph builder works with.
* :class:`DirectProduct` is a composite view of several table groups. Elements
  are mixed-radix encodings of component tuples, so products of order ~10^5
  can be queried element by element without a table.

Index 0 is always the identity.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property, reduce
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

TABLE_LIMIT = 4096
ENUMERATION_CAP = 200_000
ALL_PAIRS_CAP = 2000
FULL_ASSOCIATIVITY_LIMIT = 512


class GroupError(ValueError):
    pass


class CayleyTableError(GroupError):
    """Raised when an ingested table violates a group axiom."""

    def __init__(self, axiom: str, witness: tuple = ()):
        self.axiom = axiom
        self.witness = tuple(int(w) for w in witness)
        msg = f"{axiom} violated"
        if witness:
            msg += f" at {self.witness}"
        super().__init__(msg)


class _GroupBase:
    name: str
    order: int
    identity = 0

    # Subclasses provide mul, inv, orders and factor bookkeeping.

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def element_order(self, g: int) -> int:
        return int(self.orders[g])

    def power(self, g: int, k: int) -> int:
        k %= self.element_order(g)
        result, base = 0, g
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def conjugate(self, g: int, x: int) -> int:
        """Return x^-1 g x."""
        return self.mul(self.mul(self.inv(x), g), x)

    def commutes(self, a: int, b: int) -> bool:
        return self.mul(a, b) == self.mul(b, a)

    def elements(self) -> range:
        if self.order > ENUMERATION_CAP:
            raise GroupError(f"{self.name}: order {self.order} exceeds enumeration cap")
        return range(self.order)

    @property
    def is_table(self) -> bool:
        return False

    def label(self, g: int) -> str:
        return str(g)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} order={self.order}>"


class Group(_GroupBase):
    """Table-backed finite group.

    ``table[a, b]`` is the index of ``a*b``. Element orders and inverses are
    computed once at construction.
    """

    def __init__(
        self,
        table,
        name: str = "G",
        labels: Sequence[str] | None = None,
        factors: Sequence["Group"] | None = None,
        validate: bool = False,
    ):
        table = np.ascontiguousarray(np.asarray(table, dtype=np.int32))
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise CayleyTableError("square non-empty table")
        if validate:
            validate_table(table)
        table.setflags(write=False)
        self.table = table
        self.name = name
        self.order = int(table.shape[0])
        self.labels = list(labels) if labels is not None else None
        self.factors = tuple(factors) if factors else None
        self.inverse = np.argmax(table == 0, axis=1).astype(np.int32)
        self.orders = _element_orders(table)
        self.inverse.setflags(write=False)
        self.orders.setflags(write=False)
        self._cache: dict = {}

    @classmethod
    def from_elements(cls, elements: Sequence, mul, name: str = "G", label=str) -> "Group":
        """Build the table from hashable elements; ``elements[0]`` must be the identity."""
        index = {x: i for i, x in enumerate(elements)}
        if len(index) != len(elements):
            raise GroupError("duplicate elements")
        n = len(elements)
        table = np.empty((n, n), dtype=np.int32)
        for i, a in enumerate(elements):
            row = table[i]
            for j, b in enumerate(elements):
                row[j] = index[mul(a, b)]
        if not (table[0] == np.arange(n)).all() or not (table[:, 0] == np.arange(n)).all():
            raise GroupError("elements[0] is not the identity")
        return cls(table, name=name, labels=[label(x) for x in elements])

    @property
    def is_table(self) -> bool:
        return True

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def label(self, g: int) -> str:
        return self.labels[g] if self.labels is not None else str(g)

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def powers(self) -> np.ndarray:
        """``powers[g, k] = g**k`` for ``0 <= k < exponent``."""
        n = self.order
        m = exponent(self)
        out = np.empty((n, m), dtype=np.int32)
        out[:, 0] = 0
        idx = np.arange(n)
        for k in range(1, m):
            out[:, k] = self.table[out[:, k - 1], idx]
        return out

    @cached_property
    def cyclic_membership(self) -> np.ndarray:
        """Boolean matrix, ``[z, g]`` true iff g lies in <z>."""
        n = self.order
        member = np.zeros((n, n), dtype=bool)
        rows = np.repeat(np.arange(n), self.powers.shape[1])
        member[rows, self.powers.ravel()] = True
        return member

    @cached_property
    def generators(self) -> tuple[int, ...]:
        # Greedy: highest order first, index as tie-break.
        candidates = sorted(range(self.order), key=lambda g: (-int(self.orders[g]), g))
        gens: list[int] = []
        inside = np.zeros(self.order, dtype=bool)
        inside[0] = True
        for g in candidates:
            if inside[g]:
                continue
            gens.append(g)
            inside[list(subgroup_closure(self, gens))] = True
            if inside.all():
                break
        return tuple(gens)

    def conjugation_permutation(self, x: int) -> np.ndarray:
        """Array mapping g to x^-1 g x."""
        return self.table[self.table[self.inverse[x], :], x]

    # direct-product bookkeeping
    def decompose(self, g: int) -> tuple[int, ...]:
        return _mixed_radix_split(g, [f.order for f in self.factors])

    def compose(self, parts: Sequence[int]) -> int:
        return _mixed_radix_join(parts, [f.order for f in self.factors])


class DirectProduct(_GroupBase):
    """Composite direct product of table groups; never materializes a table."""

    def __init__(self, factors: Sequence[Group], name: str | None = None):
        if not factors:
            raise GroupError("direct product needs at least one factor")
        for f in factors:
            if not f.is_table:
                raise GroupError("composite factors must be table-backed")
        self.factors = tuple(factors)
        self.name = name or "x".join(f.name for f in factors)
        self._sizes = [f.order for f in factors]
        self.order = math.prod(self._sizes)
        self._cache: dict = {}

    def decompose(self, g: int) -> tuple[int, ...]:
        return _mixed_radix_split(g, self._sizes)

    def compose(self, parts: Sequence[int]) -> int:
        return _mixed_radix_join(parts, self._sizes)

    def mul(self, a: int, b: int) -> int:
        pa, pb = self.decompose(a), self.decompose(b)
        return self.compose([f.mul(x, y) for f, x, y in zip(self.factors, pa, pb)])

    def inv(self, a: int) -> int:
        return self.compose([f.inv(x) for f, x in zip(self.factors, self.decompose(a))])

    def element_order(self, g: int) -> int:
        return math.lcm(*(f.element_order(x) for f, x in zip(self.factors, self.decompose(g))))

    @cached_property
    def orders(self) -> np.ndarray:
        if self.order > ENUMERATION_CAP:
            raise GroupError(f"{self.name}: order {self.order} exceeds enumeration cap")
        out = np.ones(1, dtype=np.int64)
        for f in self.factors:
            out = np.lcm(out[:, None], f.orders[None, :].astype(np.int64)).ravel()
        return out

    @cached_property
    def generators(self) -> tuple[int, ...]:
        gens = []
        for i, f in enumerate(self.factors):
            for g in f.generators:
                parts = [0] * len(self.factors)
                parts[i] = g
                gens.append(self.compose(parts))
        return tuple(gens)

    def label(self, g: int) -> str:
        return "(" + ",".join(f.label(x) for f, x in zip(self.factors, self.decompose(g))) + ")"


AnyGroup = _GroupBase


def _mixed_radix_split(g: int, sizes: Sequence[int]) -> tuple[int, ...]:
    parts = []
    for size in reversed(sizes):
        g, r = divmod(g, size)
        parts.append(r)
    return tuple(reversed(parts))


def _mixed_radix_join(parts: Sequence[int], sizes: Sequence[int]) -> int:
    g = 0
    for p, size in zip(parts, sizes):
        g = g * size + int(p)
    return g


def _element_orders(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    idx = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    cur = idx.copy()
    for k in range(1, n + 1):
        hit = (cur == 0) & (orders == 0)
        orders[hit] = k
        if orders.all():
            return orders
        cur = table[cur, idx]
    raise CayleyTableError("finite element orders")


# ---------------------------------------------------------------------------
# validation and ingestion


def validate_table(table: np.ndarray, seed: int = 0) -> None:
    """Check closure, identity at 0, inverses and associativity.

    Associativity is checked exhaustively up to order 512 and on
    ``10 * n`` random triples above that.
    """
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        bad = np.argwhere((table < 0) | (table >= n))[0]
        raise CayleyTableError("closure", (bad[0], bad[1], table[bad[0], bad[1]]))
    idx = np.arange(n)
    if not (table[0] == idx).all() or not (table[:, 0] == idx).all():
        bad = int(np.argmax((table[0] != idx) | (table[:, 0] != idx)))
        raise CayleyTableError("identity", (0, bad))
    for g in range(n):
        hits = np.flatnonzero(table[g] == 0)
        if len(hits) == 0 or table[hits[0], g] != 0:
            raise CayleyTableError("inverse", (g,))
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        for a in range(n):
            lhs = table[table[a][:, None], idx[None, :]]
            rhs = table[a][table]
            if not np.array_equal(lhs, rhs):
                b, c = np.argwhere(lhs != rhs)[0]
                raise CayleyTableError("associativity", (a, b, c))
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, 10 * n))
        bad = np.flatnonzero(table[table[a, b], c] != table[a, table[b, c]])
        if len(bad):
            i = bad[0]
            raise CayleyTableError("associativity", (a[i], b[i], c[i]))


def _find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    idx = np.arange(n)
    for e in range(n):
        if (table[e] == idx).all() and (table[:, e] == idx).all():
            return e
    raise CayleyTableError("identity")


def group_from_table(table, name: str = "G", labels=None) -> Group:
    """Validate a Cayley table and re-index so that the identity sits at 0."""
    table = np.asarray(table)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise CayleyTableError("square non-empty table")
    if not np.issubdtype(table.dtype, np.integer):
        raise CayleyTableError("integer entries")
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        bad = np.argwhere((table < 0) | (table >= n))[0]
        raise CayleyTableError("closure", (bad[0], bad[1], table[bad[0], bad[1]]))
    e = _find_identity(table)
    if e != 0:
        perm = np.arange(n)
        perm[0], perm[e] = e, 0
        table = perm[table[np.ix_(perm, perm)]]
        if labels is not None:
            labels = [labels[i] for i in perm]
    return Group(table, name=name, labels=labels, validate=True)


def load_cayley_json(path) -> Group:
    """Read ``{"name", "order", "table"}`` JSON (0-based indices)."""
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict) or "table" not in data:
        raise CayleyTableError("JSON object with a 'table' field")
    table = np.asarray(data["table"])
    order = data.get("order", table.shape[0] if table.ndim else 0)
    if table.ndim != 2 or table.shape != (order, order):
        raise CayleyTableError("table shape matches order")
    return group_from_table(table, name=str(data.get("name", Path(path).stem)))


def dump_cayley_json(G: Group) -> str:
    return json.dumps({"name": G.name, "order": G.order, "table": G.table.tolist()})


# ---------------------------------------------------------------------------
# queries


@dataclass(frozen=True)
class Spectrum:
    orders: frozenset
    maximal: frozenset

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "Spectrum":
        orders = frozenset(int(k) for k in orders)
        maximal = frozenset(k for k in orders if not any(l != k and l % k == 0 for l in orders))
        return cls(orders, maximal)


@dataclass(frozen=True)
class ConjClass:
    representative: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g) -> bool:
        return g in self.members


def element_order(G: AnyGroup, g: int) -> int:
    return G.element_order(g)


def spectrum(G: AnyGroup) -> Spectrum:
    return Spectrum.from_orders(np.unique(G.orders).tolist())


def exponent(G: AnyGroup) -> int:
    return math.lcm(*spectrum(G).orders)


def _check_all_pairs(G: AnyGroup, cap: int | None) -> None:
    cap = ALL_PAIRS_CAP if cap is None else cap
    if G.order > cap:
        raise GroupError(f"{G.name}: order {G.order} exceeds all-pairs cap {cap}")


def conjugacy_classes(G: AnyGroup, cap: int | None = None) -> list[ConjClass]:
    """Partition by orbit closure under conjugation by the generators.

    Classes are sorted by their least element, which is the representative.
    """
    if "classes" in G._cache:
        return G._cache["classes"]
    _check_all_pairs(G, cap)
    n = G.order
    if G.is_table:
        perms = [G.conjugation_permutation(x) for x in G.generators]
    else:
        perms = [np.array([G.conjugate(g, x) for g in range(n)]) for x in G.generators]
    if perms:
        src = np.concatenate([np.arange(n)] * len(perms))
        dst = np.concatenate(perms)
        adj = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
        _, labels = connected_components(adj, directed=True, connection="weak")
    else:
        labels = np.zeros(n, dtype=int)
    buckets: dict[int, list[int]] = {}
    for g, lab in enumerate(labels.tolist()):
        buckets.setdefault(lab, []).append(g)
    classes = sorted((ConjClass(m[0], tuple(m)) for m in buckets.values()), key=lambda c: c.representative)
    G._cache["classes"] = classes
    return classes


def class_ids(G: AnyGroup, cap: int | None = None) -> np.ndarray:
    ids = np.empty(G.order, dtype=np.int64)
    for i, c in enumerate(conjugacy_classes(G, cap)):
        ids[list(c.members)] = i
    return ids


def class_of(G: AnyGroup, g: int) -> ConjClass:
    """Conjugacy class of ``g`` by orbit closure; no full class list needed."""
    seen = {g}
    frontier = [g]
    gens = G.generators
    while frontier:
        nxt = []
        for y in frontier:
            for x in gens:
                z = G.conjugate(y, x)
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    members = tuple(sorted(seen))
    return ConjClass(members[0], members)


def centralizer(G: AnyGroup, g: int) -> frozenset:
    if G.is_table:
        return frozenset(np.flatnonzero(G.table[g, :] == G.table[:, g]).tolist())
    return frozenset(x for x in G.elements() if G.commutes(x, g))


def center(G: AnyGroup) -> frozenset:
    if G.is_table:
        comm = G.table == G.table.T
        return frozenset(np.flatnonzero(comm.all(axis=1)).tolist())
    if not G.is_table and hasattr(G, "factors"):
        # Z(A x B) = Z(A) x Z(B)
        parts = [sorted(center(f)) for f in G.factors]
        out = [0]
        for f, zs in zip(G.factors, parts):
            out = [x * f.order + z for x in out for z in zs]
        return frozenset(out)
    raise GroupError("center needs a table or a product")


def cyclic_subgroup(G: AnyGroup, g: int) -> frozenset:
    out = {0}
    x = g
    while x != 0:
        out.add(x)
        x = G.mul(x, g)
    return frozenset(out)


def subgroup_closure(G: AnyGroup, S: Iterable[int]) -> frozenset:
    """Subgroup generated by ``S`` (breadth-first right multiplication)."""
    gens = [s for s in set(S) if s != 0]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for y in frontier:
            for s in gens:
                z = G.mul(y, s)
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return frozenset(seen)


def is_subgroup(G: AnyGroup, H: Iterable[int]) -> bool:
    H = set(H)
    if 0 not in H:
        return False
    if G.is_table:
        hs = np.fromiter(H, dtype=np.int64)
        prods = G.table[np.ix_(hs, hs)]
        return bool(np.isin(prods, hs).all())
    return all(G.mul(a, b) in H for a in H for b in H)


def is_normal(G: AnyGroup, H: Iterable[int]) -> bool:
    H = frozenset(H)
    if not is_subgroup(G, H):
        raise GroupError("is_normal expects a subgroup")
    return all(G.conjugate(h, x) in H for x in G.generators for h in H)


def spectrum_of_power(G: AnyGroup, r: int) -> Spectrum:
    """Spectrum of the direct power G^r without building it."""
    if r < 1:
        raise ValueError("r must be >= 1")
    base = spectrum(G).orders
    current = set(base)
    for _ in range(r - 1):
        nxt = {math.lcm(a, b) for a in current for b in base}
        if nxt == current:
            break
        current = nxt
    return Spectrum.from_orders(current)


def is_p_group(G: AnyGroup) -> tuple[bool, int | None]:
    """Whether |G| is a prime power, with the prime (``None`` for the trivial group)."""
    primes = prime_factors(G.order)
    if len(primes) > 1:
        return False, None
    return True, (primes[0] if primes else None)


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def lcm_all(values: Iterable[int]) -> int:
    return reduce(math.lcm, values, 1)


def subgroup(G: Group, H: Iterable[int], name: str | None = None) -> tuple[Group, list[int]]:
    """Materialize a subgroup as its own table group.

    Returns the group and the list mapping its indices back into ``G``.
    """
    members = sorted(set(int(h) for h in H))
    if not is_subgroup(G, members):
        raise GroupError("not a subgroup")
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[members] = np.arange(len(members))
    table = pos[G.table[np.ix_(members, members)]]
    labels = [G.label(h) for h in members] if G.labels else None
    return Group(table, name=name or f"{G.name}<{len(members)}>", labels=labels), members
