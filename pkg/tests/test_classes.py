import pytest

from supergraphs import classes as gc
from supergraphs.catalog import catalog, get_group
from supergraphs.group import GroupError, centralizer, cyclic_subgroup, is_normal

from conftest import by_label

names_200 = [e.name for e in catalog(200)]


def test_q8_profile():
    p = gc.class_profile(get_group("Q8"))
    assert p.dedekind and p.two_engel and p.generalized_quaternion
    assert not p.abelian and p.p_group and p.prime == 2
    assert p.eppo and not p.has_CpCp


def test_s3_profile():
    p = gc.class_profile(get_group("S3"))
    assert not p.dedekind and not p.two_engel and p.eppo
    assert p.same_order_implies_conjugate and not p.star_property
    assert "dedekind" in p.witnesses


def test_examples():
    assert gc.has_CpCp(get_group("C2^2"))
    assert not gc.has_CpCp(get_group("C4"))
    assert not gc.is_eppo(get_group("C6"))
    assert gc.is_eppo(get_group("A5"))
    assert gc.star_property(get_group("C2xC4"))
    assert not gc.star_property(get_group("S4"))
    assert gc.is_dedekind(get_group("C2xQ8"))
    assert not gc.is_generalized_quaternion(get_group("C8"))
    assert gc.is_generalized_quaternion(get_group("Q32"))


def brute_2_engel(G):
    def comm(x, y):
        return G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y))
    return all(comm(comm(x, g), g) == 0 for x in range(G.order) for g in range(G.order))


def brute_dedekind(G):
    return all(is_normal(G, cyclic_subgroup(G, g)) for g in range(G.order))


@pytest.mark.parametrize("name", [n for n in names_200 if get_group(n).order <= 64])
def test_predicates_match_brute_force(name):
    G = get_group(name)
    assert bool(gc.is_2_engel(G)) == brute_2_engel(G)
    assert bool(gc.is_dedekind(G)) == brute_dedekind(G)


@pytest.mark.parametrize("name", names_200)
def test_two_engel_equivalences(name):
    G = get_group(name)
    e = bool(gc.is_2_engel(G))
    assert bool(gc.centralizers_normal(G)) == e
    assert bool(gc.conjugates_commute(G)) == e


@pytest.mark.parametrize("name", names_200)
def test_spectrum_lcm_closed_iff_star_for_abelian(name):
    G = get_group(name)
    if gc.is_abelian(G):
        assert gc.star_property(G) and gc.spectrum_lcm_closed(G)


def test_jordan_witness():
    S4 = get_group("S4")
    for g in range(S4.order):
        H = cyclic_subgroup(S4, g)
        if len(H) < S4.order:
            c = gc.jordan_witness(S4, H)
            assert set(c.members).isdisjoint(H)
    D4 = get_group("D4")
    H = centralizer(D4, by_label(D4, "s"))
    assert set(gc.jordan_witness(D4, H).members).isdisjoint(H)
    with pytest.raises(GroupError):
        gc.jordan_witness(D4, set(range(8)))
    with pytest.raises(GroupError):
        gc.jordan_witness(D4, {0, 1})


def test_same_order_conjugate_is_rare():
    hits = [n for n in names_200 if gc.same_order_implies_conjugate(get_group(n))]
    assert set(hits) <= {"C1", "C2", "S3", "D3", "C3:C2"}
    assert "S3" in hits
