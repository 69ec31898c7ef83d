"""Acceptance criteria, one test each; the conftest prints a PASS/FAIL line per test."""
import subprocess
import sys
import time

import networkx as nx
import numpy as np

from supergraphs import harness
from supergraphs.analysis import maximal_cliques
from supergraphs.catalog import catalog, get_group
from supergraphs.group import center, spectrum_of_power
from supergraphs.supergraph import GraphKind, RelKind, build_graph

P, E, C = GraphKind.POWER, GraphKind.ENHANCED, GraphKind.COMMUTING
EQ, CJ, OR = RelKind.EQUALITY, RelKind.CONJUGACY, RelKind.ORDER


def _clear_caches(entries):
    for e in entries:
        G = get_group(e.name)
        if G.is_table:
            G._cache.clear()


def _run(theorem, max_order):
    return harness.run_verification(max_order, [theorem], threads=1)


def _no_fail(reports):
    bad = [r.as_dict() for r in reports if r.verdict == harness.FAIL]
    assert not bad, bad[:3]


def _by(reports, theorem, group):
    return [r for r in reports if r.theorem == theorem and r.group == group][0]


def test_criterion_01_osepow_equals_oscom():
    entries = catalog(200)
    _clear_caches(entries)
    start = time.perf_counter()
    reps = _run("osepow-oscom", 200)
    elapsed = time.perf_counter() - start
    assert len(reps) == len(entries)
    assert all(r.verdict == harness.PASS for r in reps)
    assert elapsed < 30, elapsed


def test_criterion_02_completeness_table():
    reps = _run("completeness", 200)
    assert len(reps) == 9 * len(catalog(200))
    _no_fail(reps)
    q8 = {r.theorem: r.computed for r in reps if r.group == "Q8"}
    assert [q8[f"complete:{n}"] for n in ("OSPow", "OSEPow", "OSCom")] == [True] * 3
    assert not any(v for k, v in q8.items() if not k.startswith("complete:OS"))
    assert all(r.computed for r in reps if r.group == "C8")


def test_criterion_03_dominant_vertices():
    reps = _run("dominant", 200)
    _no_fail(reps)
    assert {r.theorem for r in reps if r.verdict == harness.PASS} == {
        f"dominant:{n}" for n in ("Pow", "EPow", "Com", "CSPow", "CSEPow", "CSCom", "OSPow")}
    assert all(r.verdict == harness.REPORT for r in reps if r.theorem == "dominant:OSCom")
    C6, Q8 = get_group("C6"), get_group("Q8")
    assert _by(reps, "dominant:Pow", "C6").computed == sorted(C6.labels.index(x) for x in ("e", "g^1", "g^5"))
    assert _by(reps, "dominant:Pow", "Q8").computed == sorted(center(Q8))
    assert _by(reps, "dominant:OSPow", "S3").computed == [0]


def test_criterion_04_equality_theorems():
    reps = _run("equalities", 200)
    _no_fail(reps)
    bicond = [r for r in reps if "<=>" in r.theorem]
    assert len(bicond) == 5 * len(catalog(200))
    assert {r.computed for r in bicond} == {True, False}  # both directions exercised
    D4, Q8, S3 = get_group("D4"), get_group("Q8"), get_group("S3")
    eq = lambda G, a, b: np.array_equal(build_graph(G, *a).adj, build_graph(G, *b).adj)
    assert eq(D4, (C, EQ), (C, CJ)) and not eq(D4, (P, EQ), (P, CJ))
    assert eq(Q8, (P, EQ), (P, CJ))
    assert eq(S3, (P, EQ), (E, EQ)) and not eq(S3, (C, EQ), (C, CJ))


def test_criterion_05_clique_formulas():
    entries = catalog(100)
    _clear_caches(entries)
    start = time.perf_counter()
    reps = _run("clique-formula", 100)
    elapsed = time.perf_counter() - start
    assert len(reps) == 2 * len(entries)
    _no_fail(reps)
    assert _by(reps, "clique-formula:OSPow", "S4").computed == 16
    assert elapsed < 60, elapsed


def test_criterion_06_d4_maximal_cliques():
    D4 = get_group("D4")
    expected = sorted(sorted(D4.labels.index(x) for x in c)
                      for c in (["e", "r", "r^2", "r^3"], ["e", "s", "r^2s"], ["e", "rs", "r^3s"]))
    for kind in (P, E):
        found = maximal_cliques(build_graph(D4, kind, CJ))
        assert not found.truncated
        assert sorted(sorted(c) for c in found) == expected


def test_criterion_07_perfectness_evidence():
    reps = _run("perfectness", 200)
    _no_fail(reps)
    holes = [r for r in reps if r.theorem.startswith("no-odd-hole")]
    assert {r.group for r in holes} == {e.name for e in catalog(48)}
    assert len([r for r in reps if r.theorem.startswith("comparability")]) == 2 * len(catalog(200))


def test_criterion_08_universality():
    start = time.perf_counter()
    reps = [harness.check_universality(n, e) for n, e in harness.small_graphs(3)]
    elapsed = time.perf_counter() - start
    assert all(r.verdict == harness.PASS for r in reps), [r.as_dict() for r in reps if r.verdict != harness.PASS]
    # every isomorphism type on <= 3 vertices is among the labelled graphs checked
    types = {nx.weisfeiler_lehman_graph_hash(nx.Graph(e), iterations=2) + str(n)
             for n, e in harness.small_graphs(3)}
    assert len(types) == 7
    on_three = {nx.weisfeiler_lehman_graph_hash(nx.Graph(e)) + str(len(e)) for n, e in harness.small_graphs(3) if n == 3}
    assert len(on_three) == 4
    assert elapsed < 60, elapsed


def test_criterion_09_orbit_property():
    reps = _run("orbit", 100)
    assert len(reps) == 3 * len(catalog(100))
    assert all(r.verdict == harness.PASS for r in reps)


def test_criterion_10_s3_separation():
    reps = harness.check_s3_separation()
    assert len(reps) == 12
    assert all(r.verdict == harness.PASS for r in reps)


def test_criterion_11_spectrum_of_power():
    A5 = get_group("A5")
    assert spectrum_of_power(A5, 3).orders == {1, 2, 3, 5, 6, 10, 15, 30}
    assert 30 not in spectrum_of_power(A5, 2).orders


def test_criterion_12_determinism():
    cmd = [sys.executable, "-m", "supergraphs", "verify", "--max-order", "64", "--quiet"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert first.returncode == 0, first.stderr.decode()[-500:]
    assert first.stdout and first.stdout == second.stdout
