import itertools
import math

import pytest
from sympy import isprime

from supergraphs.catalog import (
    alternating,
    catalog,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    embed_graph,
    generalized_quaternion,
    get_group,
    heisenberg,
    nonabelian_pq,
    prime_chain,
    symmetric,
)
from supergraphs import classes as gc
from supergraphs.group import GroupError, center, class_of, conjugacy_classes, exponent, is_p_group, cyclic_subgroup

from conftest import by_label

QUAT = {  # unit * unit -> (sign, unit)
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def qmul(x, y):
    s, u = QUAT[(x[1], y[1])]
    return (x[0] * y[0] * s, u)


def qpow(x, n):
    out = (1, "1")
    for _ in range(n):
        out = qmul(out, x)
    return out


def test_q8_matches_quaternion_units():
    Q8 = generalized_quaternion(3)
    i, j = (1, "i"), (1, "j")
    # a^x b^y -> i^x j^y
    image = {}
    for g in range(8):
        lab = Q8.label(g)
        x = 0 if "a" not in lab else (int(lab.split("^")[1][0]) if "a^" in lab else 1)
        y = 1 if "b" in lab else 0
        image[g] = qmul(qpow(i, x), qpow(j, y))
    assert len(set(image.values())) == 8
    for g in range(8):
        for h in range(8):
            assert image[Q8.mul(g, h)] == qmul(image[g], image[h])
    assert int((Q8.orders == 2).sum()) == 1
    assert sorted(len(c) for c in conjugacy_classes(Q8)) == [1, 1, 2, 2, 2]


def test_q16_noncconjugate_order4_subgroups():
    Q16 = get_group("Q16")
    b = by_label(Q16, "b")
    a4 = by_label(Q16, "a^4")
    # <b> has order 4; a^4 is the central involution, so take a^2 for the other cyclic 4
    a2 = by_label(Q16, "a^2")
    H1, H2 = cyclic_subgroup(Q16, b), cyclic_subgroup(Q16, a2)
    assert len(H1) == len(H2) == 4 and a4 in H1 and a4 in H2
    conj = {frozenset(Q16.conjugate(h, x) for h in H1) for x in range(16)}
    assert frozenset(H2) not in conj


def test_family_orders():
    assert dihedral(7).order == 14
    assert generalized_quaternion(5).order == 32
    assert symmetric(5).order == 120
    assert alternating(5).order == 60
    assert elementary_abelian(3, 3).order == 27
    assert cyclic(1).order == 1


def test_dihedral3_vs_symmetric3():
    D3, S3 = dihedral(3), symmetric(3)
    assert sorted(D3.orders.tolist()) == sorted(S3.orders.tolist())
    assert sorted(map(len, conjugacy_classes(D3))) == sorted(map(len, conjugacy_classes(S3)))


def test_direct_product_has_order6():
    P = direct_product(cyclic(2), cyclic(3))
    assert 6 in P.orders.tolist()


def test_nonabelian_pq():
    G = nonabelian_pq(2, 3)
    assert G.order == 6 and sorted(map(len, conjugacy_classes(G))) == [1, 2, 3]
    G = nonabelian_pq(3, 7)
    assert G.order == 21 and center(G) == {0}
    G = nonabelian_pq(2, 5)
    assert int((G.orders == 2).sum()) == 5
    with pytest.raises(GroupError):
        nonabelian_pq(3, 5)


def test_heisenberg():
    H = heisenberg(3)
    assert H.order == 27 and not gc.is_abelian(H)
    assert gc.is_2_engel(H)
    assert len(center(H)) == 3
    assert exponent(H) == 3
    with pytest.raises(GroupError):
        heisenberg(2)


def test_quaternion_rejects_small_k():
    with pytest.raises(GroupError):
        generalized_quaternion(2)


@pytest.mark.parametrize("n,expected", [(1, [2]), (2, [2, 3]), (3, [2, 3, 7]), (5, [2, 3, 7, 43, 3613])])
def test_prime_chain(n, expected):
    assert prime_chain(n) == expected


def test_prime_chain_properties():
    chain = prime_chain(6)
    assert all(isprime(p) for p in chain)
    assert chain == sorted(chain)
    for p, q in itertools.combinations(chain, 2):
        assert (q - 1) % p == 0
    # least: no smaller prime is 1 mod the lcm of the earlier ones
    for k in range(1, 6):
        m = math.lcm(*chain[:k])
        assert not any(isprime(j * m + 1) for j in range(1, (chain[k] - 1) // m))


def test_catalog_contents():
    entries = catalog()
    assert len(entries) >= 40
    names = {e.name for e in entries}
    for must in ["C64", "D32", "Q8", "Q16", "Q32", "S3", "S4", "S5", "A4", "A5", "C2^3", "C3^3",
                 "Heis3", "C3:C2", "C5:C2", "C7:C3", "C7:C2", "C2xC4", "C2xQ8", "S3xC2"]:
        assert must in names or any(e.params in (tuple(must.split("x")), tuple(reversed(must.split("x")))) for e in entries), must
    assert [(e.order, e.name) for e in entries] == sorted((e.order, e.name) for e in entries)


@pytest.mark.parametrize("entry", catalog(200), ids=lambda e: e.name)
def test_catalog_predictions(entry):
    G = get_group(entry.name)
    assert G.order == entry.order
    computed = {"abelian": bool(gc.is_abelian(G)), "cyclic": bool(gc.is_cyclic(G)),
                "dedekind": bool(gc.is_dedekind(G)), "p_group": is_p_group(G)[0]}
    for key, value in entry.predicted.items():
        assert computed[key] == value, key


def test_embed_graph_examples():
    w = embed_graph(3, [(0, 1), (0, 2), (1, 2)])
    assert w.group.order == 42 and gc.is_cyclic(w.group)
    w = embed_graph(2, [])
    assert w.group.order == 6
    x1, x2 = w.elements
    assert w.group.element_order(x1) == 2 and w.group.element_order(x2) == 3
    assert not any(w.group.commutes(c, x2) for c in class_of(w.group, x1).members)
    w = embed_graph(3, [(0, 2), (1, 2)])
    assert w.group.order == 42
    w = embed_graph(3, [])
    assert w.group.order == 42**3 and not w.group.is_table
    for k, x in enumerate(w.elements):
        assert w.group.element_order(x) == w.primes[k]


def test_embed_graph_unverified_beyond_bound():
    w = embed_graph(4, [])
    assert not w.materializable and w.group is None


@pytest.mark.parametrize("name", [e.name for e in catalog(200)])
def test_distinct_prime_orders_enhanced_iff_commuting(name):
    from supergraphs.supergraph import GraphKind, base_adjacency
    G = get_group(name)
    enh, com = base_adjacency(G, GraphKind.ENHANCED), base_adjacency(G, GraphKind.COMMUTING)
    primes = [g for g in range(G.order) if gc._prime_power(int(G.orders[g])) and not gc._is_proper_power(int(G.orders[g])) and G.orders[g] > 1]
    for g, h in itertools.combinations(primes, 2):
        if G.orders[g] != G.orders[h]:
            assert enh[g, h] == com[g, h]
