"""Group-class predicates with witnesses."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from .group import (
    ConjClass,
    Group,
    GroupError,
    centralizer,
    conjugacy_classes,
    exponent,
    is_normal,
    is_p_group,
    is_subgroup,
    spectrum,
)


@dataclass(frozen=True)
class Verdict:
    value: bool
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.value


def _commutator_table(G: Group) -> np.ndarray:
    """``[x, y] = x^-1 y^-1 x y`` for all pairs."""
    T, inv = G.table, G.inverse
    left = T[inv[:, None], inv[None, :]]
    return T[left, T]


def is_abelian(G: Group) -> Verdict:
    bad = np.argwhere(G.table != G.table.T)
    return Verdict(True) if len(bad) == 0 else Verdict(False, tuple(int(x) for x in bad[0]))


def is_cyclic(G: Group) -> Verdict:
    hits = np.flatnonzero(G.orders == G.order)
    return Verdict(True, (int(hits[0]),)) if len(hits) else Verdict(False)


def is_eppo(G: Group) -> Verdict:
    """Every element order is a prime power."""
    for g in range(G.order):
        k = int(G.orders[g])
        if k > 1 and not _prime_power(k):
            return Verdict(False, (g,))
    return Verdict(True)


def _prime_power(k: int) -> bool:
    p = 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            return k == 1
        p += 1
    return True


def is_dedekind(G: Group) -> Verdict:
    """Every cyclic subgroup is normal (enough, since subgroups are joins of cyclic ones)."""
    member = G.cyclic_membership
    for x in G.generators:
        conj = G.conjugation_permutation(x)
        # row g of member[conj] marks <g>; need x^-1 g x in <g>
        bad = np.flatnonzero(~member[np.arange(G.order), conj])
        if len(bad):
            return Verdict(False, (int(bad[0]), x))
    return Verdict(True)


def is_2_engel(G: Group) -> Verdict:
    comm = _commutator_table(G)
    double = comm[comm, np.arange(G.order)[None, :]]
    bad = np.argwhere(double != 0)
    return Verdict(True) if len(bad) == 0 else Verdict(False, tuple(int(v) for v in bad[0]))


def centralizers_normal(G: Group) -> Verdict:
    for g in range(G.order):
        if not is_normal(G, centralizer(G, g)):
            return Verdict(False, (g,))
    return Verdict(True)


def conjugates_commute(G: Group) -> Verdict:
    """x^g commutes with x for all x, g."""
    T = G.table
    n = G.order
    # conj[g, x] = g^-1 x g
    conj = T[T[G.inverse[:, None], np.arange(n)[None, :]], np.arange(n)[:, None]]
    xs = np.broadcast_to(np.arange(n)[None, :], (n, n))
    bad = np.argwhere(T[conj, xs] != T[xs, conj])
    return Verdict(True) if len(bad) == 0 else Verdict(False, (int(bad[0][1]), int(bad[0][0])))


def has_CpCp(G: Group) -> Verdict:
    """Commuting x, y of the same prime order with y outside <x>."""
    member = G.cyclic_membership
    T = G.table
    for p in sorted(set(int(k) for k in G.orders)):
        if p < 2 or not _prime_power(p) or _is_proper_power(p):
            continue
        elems = np.flatnonzero(G.orders == p)
        if len(elems) <= p - 1:
            continue
        sub = T[np.ix_(elems, elems)] == T[np.ix_(elems, elems)].T
        inside = member[np.ix_(elems, elems)]
        hit = np.argwhere(sub & ~inside)
        if len(hit):
            return Verdict(True, (int(elems[hit[0][0]]), int(elems[hit[0][1]])))
    return Verdict(False)


def _is_proper_power(k: int) -> bool:
    p = 2
    while p * p <= k:
        if k % p == 0:
            return True
        p += 1
    return False


def star_property(G: Group) -> Verdict:
    """An element whose order is the exponent exists."""
    m = exponent(G)
    hits = np.flatnonzero(G.orders == m)
    return Verdict(True, (int(hits[0]),)) if len(hits) else Verdict(False)


def spectrum_lcm_closed(G: Group) -> bool:
    import math

    orders = spectrum(G).orders
    return all(math.lcm(a, b) in orders for a in orders for b in orders)


def same_order_implies_conjugate(G: Group) -> Verdict:
    for c in conjugacy_classes(G):
        k = G.orders[c.representative]
        fiber = np.flatnonzero(G.orders == k)
        if len(fiber) != len(c):
            other = next(int(g) for g in fiber if g not in c.members)
            return Verdict(False, (c.representative, other))
    return Verdict(True)


def is_generalized_quaternion(G: Group) -> bool:
    """Non-cyclic 2-group with a unique involution."""
    pg, p = is_p_group(G)
    if not pg or p != 2:
        return False
    return int((G.orders == 2).sum()) == 1 and not is_cyclic(G)


def jordan_witness(G: Group, H) -> ConjClass:
    """A conjugacy class disjoint from the proper subgroup H."""
    H = frozenset(H)
    if not is_subgroup(G, H):
        raise GroupError("jordan_witness expects a subgroup")
    if len(H) == G.order:
        raise GroupError("jordan_witness expects a proper subgroup")
    for c in conjugacy_classes(G):
        if H.isdisjoint(c.members):
            return c
    raise AssertionError(f"no class of {G.name} avoids H; Jordan's theorem says this cannot happen")


@dataclass
class ClassProfile:
    group: str
    order: int
    abelian: bool
    cyclic: bool
    p_group: bool
    prime: int | None
    eppo: bool
    dedekind: bool
    two_engel: bool
    star_property: bool
    has_CpCp: bool
    same_order_implies_conjugate: bool
    generalized_quaternion: bool
    witnesses: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return asdict(self)


def class_profile(G: Group) -> ClassProfile:
    checks = {
        "abelian": is_abelian(G),
        "cyclic": is_cyclic(G),
        "eppo": is_eppo(G),
        "dedekind": is_dedekind(G),
        "two_engel": is_2_engel(G),
        "star_property": star_property(G),
        "has_CpCp": has_CpCp(G),
        "same_order_implies_conjugate": same_order_implies_conjugate(G),
    }
    pg, p = is_p_group(G)
    witnesses = {k: list(v.witness) for k, v in checks.items() if v.witness}
    return ClassProfile(
        group=G.name,
        order=G.order,
        p_group=pg,
        prime=p,
        generalized_quaternion=is_generalized_quaternion(G),
        witnesses=witnesses,
        **{k: bool(v) for k, v in checks.items()},
    )

