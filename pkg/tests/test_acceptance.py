"""Acceptance suite: every criterion at its stated (exact) tolerance.

Each test prints one PASS/FAIL line; run with `pytest tests/test_acceptance.py -v -s`.
All identities are integer equalities or inequalities, no tolerances.
"""

import random
import sys
from itertools import combinations
from math import comb

import pytest

import oracles
from conftest import complete_graph
from sqfpow import (
    Corpus,
    Hypergraph,
    aim,
    aim_profile,
    aim_star,
    betti_table,
    bundled_corpus,
    edge_ideal,
    induced_matching_number,
    pair_corpus,
    run_campaign,
    sqfree_power,
)
from sqfpow.corpus import (
    random_disjoint_edge_hypergraph,
    random_general_ideal,
    random_hypergraph,
    random_squarefree_ideal,
    random_uniform_hypergraph,
)

JOBS = 2


@pytest.fixture(scope="module")
def chordal_corpus():
    return bundled_corpus("chordal_le9")


@pytest.fixture(scope="module")
def graphs_le7():
    return bundled_corpus("graphs_le7")


def report_line(num, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    line = f"ACCEPTANCE {num:02d} {name}: {status} {detail}"
    print(line)
    if sys.__stdout__ is not None and sys.stdout is not sys.__stdout__:
        # keep the line visible even under pytest's capture
        print(line, file=sys.__stdout__)
    assert ok, f"criterion {num} ({name}) failed: {detail}"


def test_c01_chordal_conjecture_sweep(chordal_corpus):
    report = run_campaign(
        "chordal-conjecture",
        chordal_corpus,
        {"connected": True, "nmax": 8, "jobs": JOBS, "char": 2},
    )
    instances = {r.instance for r in report.records}
    ok = report.ok and len(instances) == 1967
    report_line(
        1,
        "chordal conjecture, connected chordal n<=8, all k",
        ok,
        f"({len(instances)} graphs, {len(report.records)} checks, {report.n_fail} failures)",
    )


def test_c02_block_graph_theorem(chordal_corpus):
    report = run_campaign(
        "block-theorem",
        chordal_corpus,
        {"connected": True, "jobs": JOBS, "char": 2},
    )
    instances = {r.instance for r in report.records}
    ok = report.ok and len(instances) == 758
    report_line(
        2,
        "block-graph equality reg = aim + k, connected n<=9, all k",
        ok,
        f"({len(instances)} graphs, {len(report.records)} checks, {report.n_fail} failures)",
    )


def test_c03_cm_chordal_k2(chordal_corpus):
    report = run_campaign("cm-chordal-2", chordal_corpus, {"jobs": JOBS, "char": 2})
    instances = {r.instance for r in report.records}
    ok = report.ok and len(instances) == 767
    report_line(
        3,
        "CM chordal equality reg I^[2] = aim(G,2) + 2, n<=9, nu>=2",
        ok,
        f"({len(instances)} graphs, {report.n_fail} failures)",
    )


def test_c04_general_lower_bound():
    rng = random.Random(20260810)
    mixed = [
        random_hypergraph(rng, n_range=(4, 9), size_range=(2, 4), max_edges=6)
        for _ in range(500)
    ]
    uniform = [
        random_uniform_hypergraph(rng, d, n_range=(4, 9), max_edges=7)
        for d in (2, 3)
        for _ in range(250)
    ]
    rep_mixed = run_campaign(
        "lower-bound", Corpus.from_objects(mixed, "mixed"), {"jobs": JOBS}
    )
    rep_uniform = run_campaign(
        "lower-bound", Corpus.from_objects(uniform, "uniform"), {"jobs": JOBS}
    )
    ok = (
        rep_mixed.ok
        and rep_uniform.ok
        and len({r.instance for r in rep_mixed.records}) == 500
        and len({r.instance for r in rep_uniform.records}) == 500
    )
    report_line(
        4,
        "reg >= L + k on 500 mixed and (d-1)aim + k on 500 uniform hypergraphs",
        ok,
        f"({len(rep_mixed.records) + len(rep_uniform.records)} checks)",
    )


def test_c05_complete_intersection_formula():
    rng = random.Random(5)
    corpus = Corpus.from_objects(
        [random_disjoint_edge_hypergraph(rng, max_edges=4, size_range=(2, 4)) for _ in range(100)],
        "ci",
    )
    report = run_campaign("ci-formula", corpus, {"jobs": JOBS})
    ok = report.ok and len({r.instance for r in report.records}) == 100
    report_line(
        5,
        "reg I^[k] = |V| - |E| + k on 100 disjoint-edge hypergraphs, all k",
        ok,
        f"({len(report.records)} checks)",
    )


def test_c06_betti_splitting_identity(graphs_le7):
    base = Corpus.from_objects(
        [it.obj for it in graphs_le7 if it.obj.n <= 5 and it.obj.edges], "le5"
    )
    assert len(base) == 47
    report = run_campaign("splitting", pair_corpus(base), {"jobs": JOBS})
    nontrivial = sum(1 for r in report.records if "identity_ok" in r.data)
    ok = report.ok and len(report.records) >= 2209 and nontrivial > 500
    report_line(
        6,
        "Betti-splitting identity for all disjoint-union pairs n<=5, all k",
        ok,
        f"({len(report.records)} splittings, {nontrivial} with nonzero K)",
    )


def test_c07_aim_algebra(graphs_le7):
    failures = []
    checked_2u = 0
    for item in graphs_le7:
        G = item.obj
        if not G.edges:
            continue
        prof = aim_profile(G)
        nu = len(prof)
        if prof[0] != induced_matching_number(G):
            failures.append((item.ident, "aim1"))
        for k in range(1, nu + 1):
            if prof[k - 1] < k:
                failures.append((item.ident, "aim>=k"))
            if k >= 2 and not prof[k - 2] <= prof[k - 1] <= prof[k - 2] + 1:
                failures.append((item.ident, "chain"))
        checked_2u += 1

    triples = [
        (1 << a) | (1 << b) | (1 << c) for a, b, c in combinations(range(7), 3)
    ]
    checked_3u = 0
    for r in range(1, 7):
        for combo in combinations(triples, r):
            H = Hypergraph(7, combo)
            prof = aim_profile(H)
            nu = len(prof)
            if prof[0] != induced_matching_number(H):
                failures.append((combo, "aim1-3u"))
            for k in range(2, nu + 1):
                if not (k <= prof[k - 1] and prof[k - 2] <= prof[k - 1] <= prof[k - 2] + 1):
                    failures.append((combo, "chain-3u"))
            checked_3u += 1

    for k in range(1, 5):
        G = complete_graph(2 * k)
        if aim(G, k) != k or aim_star(G, k) != 1:
            failures.append((f"K{2*k}", "complete"))

    expected_3u = sum(comb(35, r) for r in range(1, 7))
    ok = not failures and checked_2u == 1245 and checked_3u == expected_3u
    report_line(
        7,
        "aim algebra: nu1 = aim(.,1), chain, aim>=k; K_2k values",
        ok,
        f"({checked_2u} graphs, {checked_3u} 3-uniform instances)"
        + (f" first failure: {failures[0]}" if failures else ""),
    )


def test_c08_colon_graph_structure(chordal_corpus):
    rep_colon = run_campaign(
        "colon-weakly-chordal", chordal_corpus, {"jobs": JOBS}
    )
    edges_checked = sum(r.data.get("edges_checked", 0) for r in rep_colon.records)
    rep_nu1 = run_campaign("nu1-lemmas", chordal_corpus, {"jobs": JOBS})
    pairs_checked = sum(r.data.get("pairs_checked", 0) for r in rep_nu1.records)
    ok = rep_colon.ok and rep_nu1.ok and edges_checked > 100000 and pairs_checked > 1000
    report_line(
        8,
        "G~ weakly chordal + colon identity on chordal n<=9; nu1(G~) <= aim(G,2)-1",
        ok,
        f"({edges_checked} edges, {pairs_checked} lemma pairs, "
        f"{rep_colon.n_fail + rep_nu1.n_fail} failures)",
    )


def test_c09_betti_oracle(graphs_le7):
    rng = random.Random(90)
    ideals = []
    for item in graphs_le7:
        G = item.obj
        if G.n <= 5 and 1 <= len(G.edges) <= 5:
            ideals.append(edge_ideal(G))
            power = sqfree_power(G, 2)
            if not power.is_zero() and len(power.gens) <= 5:
                ideals.append(power)
    while len(ideals) < 400:
        ideals.append(random_squarefree_ideal(rng, n_range=(2, 8), max_gens=5))
    mismatches = 0
    for ideal in ideals:
        vectors = [
            tuple(1 if g >> i & 1 else 0 for i in range(ideal.n)) for g in ideal.gens
        ]
        for p in (2, 32003):
            if betti_table(ideal, p).entries != oracles.taylor_betti(ideal.n, vectors, p):
                mismatches += 1
    ok = mismatches == 0
    report_line(
        9,
        "Hochster tables == minimized-Taylor tables at char 2 and 32003",
        ok,
        f"({len(ideals)} ideals x 2 characteristics, {mismatches} mismatches)",
    )


def test_c10_polarization_identity():
    rng = random.Random(10)
    corpus = Corpus.from_objects(
        [random_general_ideal(rng, n_range=(2, 5), max_gens=4, max_exp=2) for _ in range(200)],
        "pol",
    )
    report = run_campaign("polarization", corpus, {"jobs": JOBS, "kmax": 3})
    ok = report.ok and len({r.instance for r in report.records}) == 200
    report_line(
        10,
        "(I^[k])^P = (I^P)^[k] and reg agreement on 200 random monomial ideals",
        ok,
        f"({len(report.records)} checks)",
    )
