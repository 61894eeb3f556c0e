"""Acceptance gate: one test per criterion, each at its stated tolerance.

Every test prints a PASS or FAIL line and records it for the terminal
summary written by conftest.py.
"""
import functools
import os
import random
import time
from itertools import combinations

import pytest

from conftest import ACCEPTANCE
from oracles import (
    brute_b,
    brute_clique_partition,
    brute_matching_number,
    cone_equals_oracle,
    minimal_nonfaces_oracle,
)
from test_cone import check_is_face_against_oracle
from test_graph import check_graph_bounds
from srbound.cone import extreme_rays
from srbound.exact import determinant, rank
from srbound.family import (
    an_config,
    fifth_power_instance,
    binomial_generators,
    homogeneous_generators,
    verify_an,
)
from srbound.graph import build_graph
from srbound.groebner import groebner_member
from srbound.lattice import VectorConfig, config_height
from srbound.poly import check_cover, cone_trace
from srbound.report import analyze
from srbound.stanley_reisner import minimal_nonfaces

THREADS = os.cpu_count() or 1


def criterion(number, title):
    name = f"criterion {number}: {title}"

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                ACCEPTANCE[name] = "FAIL"
                print(f"FAIL {name}")
                raise
            ACCEPTANCE[name] = "PASS"
            print(f"PASS {name}")

        return run

    return wrap


def timed_verify(n, limit, **kw):
    start = time.perf_counter()
    rep = verify_an(n, threads=THREADS, **kw)
    elapsed = time.perf_counter() - start
    assert rep.passed, rep.table()
    assert elapsed < limit, f"A_{n} took {elapsed:.1f} s, limit {limit} s"
    return rep


def counts(an):
    return (
        an.cone.t,
        len(an.gens),
        an.graph.num_edges,
        len(an.graph.components()),
        an.b,
        an.c,
        an.height,
    )


@criterion(1, "A_3 pipeline counts and bounds under 5 s")
def test_criterion_1_a3():
    start = time.perf_counter()
    A = an_config(3)
    an = analyze(A, config_height(A), threads=THREADS)
    assert counts(an) == (6, 9, 15, 1, 5, 4, 3)
    assert time.perf_counter() - start < 5


@criterion(2, "A_4 counts and bounds under 60 s")
def test_criterion_2_a4():
    rep = timed_verify(4, 60)
    got = {c.name: c.computed for c in rep.claims}
    assert (got["SR generators"], got["edges"], got["components"]) == (48, 78, 5)
    assert (got["extreme rays"], got["b"], got["c"], got["height"]) == (12, 26, 22, 8)


@criterion(3, "A_5 counts and bounds under 10 min")
def test_criterion_3_a5():
    rep = timed_verify(5, 600)
    got = {c.name: c.computed for c in rep.claims}
    assert (got["SR generators"], got["edges"], got["components"]) == (150, 240, 15)
    assert (got["b"], got["c"]) == (80, 70)


@pytest.mark.slow
@criterion(4, "A_10 counts-only b, c and height under 60 min")
def test_criterion_4_a10():
    rep = timed_verify(10, 3600, counts_only=True)
    got = {c.name: c.computed for c in rep.claims}
    assert (got["b"], got["c"], got["height"]) == (1860, 1740, 80)


def _cover(n, polys):
    A = an_config(n)
    cone = extreme_rays(A)
    gens, _ = minimal_nonfaces(cone, THREADS)
    g = build_graph(cone, gens, THREADS)
    return check_cover(polys, cone, g, THREADS)


@criterion(5, "binomial generating set spans G_sigma; no proper subset does at n = 3")
def test_criterion_5_binomial_cover():
    for n in (3, 4, 5):
        assert _cover(n, binomial_generators(n)).spanning, n
    full = binomial_generators(3)
    for k in range(len(full)):
        rep = _cover(3, full[:k] + full[k + 1:])
        assert not rep.spanning and rep.uncovered, k


@criterion(6, "homogeneous generating set spans with complete subgraphs; fifth power membership")
def test_criterion_6_homogeneous_cover():
    for n in (3, 4):
        rep = _cover(n, homogeneous_generators(n))
        assert rep.spanning and not rep.diagnostics, n
        assert all(p.complete and p.a_homogeneous for p in rep.per_poly), n
    start = time.perf_counter()
    f, gens = fifth_power_instance(3)
    assert groebner_member(f, gens)
    assert time.perf_counter() - start < 60


def _random_config(rng, n_max=3, m_max=6):
    n = rng.randint(1, n_max)
    while True:
        vs = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(1, m_max))]
        vs = [v for v in vs if any(v)]
        if vs:
            return vs


@criterion(7, "oracle suites (a) to (e)")
def test_criterion_7_oracles():
    rng = random.Random(2024)
    # (a) face test against supporting vectors, 220 configurations
    for _ in range(220):
        check_is_face_against_oracle(_random_config(rng))
    # (b) minimal non-faces against subset enumeration, t <= 6
    done = 0
    while done < 150:
        cone = extreme_rays(_random_config(rng))
        if cone.t > 6:
            continue
        gens, _ = minimal_nonfaces(cone)
        assert [g.rays for g in gens] == minimal_nonfaces_oracle(cone.rays)
        done += 1
    cone = extreme_rays(an_config(3))
    assert [g.rays for g in minimal_nonfaces(cone)[0]] == minimal_nonfaces_oracle(cone.rays)
    # (c) and (d): every graph on at most 5 vertices, then random ones up to 10
    for n in range(6):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [e for k, e in enumerate(pairs) if mask >> k & 1]
            check_graph_bounds(n, edges)
    for _ in range(300):
        n = rng.randint(6, 10)
        p = rng.choice([0.15, 0.3, 0.5, 0.8])
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        check_graph_bounds(n, edges)
    assert brute_b(3, [(0, 1), (1, 2)]) == 2 == 3 - brute_matching_number(3, [(0, 1), (1, 2)])
    assert brute_clique_partition(4, [(0, 1), (2, 3)]) == 2
    # (e) cone_trace against the all-subsets definition, t <= 8
    done = 0
    while done < 100:
        vs = _random_config(rng, n_max=3, m_max=8)
        cone = extreme_rays(vs)
        if cone.t > 8:
            continue
        done += 1
        for k in range(1, min(3, len(vs)) + 1):
            support = rng.sample(range(len(vs)), k)
            mono = tuple(int(i in support) for i in range(len(vs)))
            tr = cone_trace(mono, cone)
            ref = cone_equals_oracle([vs[i] for i in support], cone.rays)
            assert ([tr.rays] if tr.exact else []) == ref, (vs, support)


def _unimodular(rng, n):
    while True:
        U = [[int(i == j) for j in range(n)] for i in range(n)]
        for _ in range(6):
            i, j = rng.sample(range(n), 2)
            k = rng.choice([-2, -1, 1, 2])
            U[i] = [a + k * b for a, b in zip(U[i], U[j])]
        if rng.random() < 0.5:
            U[0] = [-x for x in U[0]]
        if abs(determinant(U)) == 1 and U != [[int(i == j) for j in range(n)] for i in range(n)]:
            return U


def _structure(an):
    # SR generators and edges written in generator indices, which a linear
    # change of coordinates preserves even when it reorders the rays
    gen = an.cone.generator_of_ray()
    verts = [frozenset(gen[r] for r in v.rays) for v in an.gens]
    edges = {frozenset((verts[a], verts[b])) for a, b in an.graph.edges()}
    return set(verts), edges


@criterion(8, "A_3 reports invariant under 20 unimodular transforms")
def test_criterion_8_invariance():
    rng = random.Random(11)
    A = an_config(3)
    base = analyze(A, config_height(A))
    ref_counts, ref_structure = counts(base), _structure(base)
    for _ in range(20):
        U = _unimodular(rng, 3)
        B = VectorConfig(tuple(tuple(sum(U[i][k] * a[k] for k in range(3)) for i in range(3)) for a in A.vectors))
        an = analyze(B, config_height(B))
        assert counts(an) == ref_counts, U
        assert (an.c_interval, an.mu_lower) == (base.c_interval, base.mu_lower)
        assert _structure(an) == ref_structure, U


def _simplex_config(rng):
    n = rng.randint(1, 4)
    while True:
        basis = [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(n)]
        if rank(basis) == n:
            break
    extra = []
    for _ in range(rng.randint(0, 4)):
        coef = [rng.randint(0, 3) for _ in range(n)]
        if sum(1 for c in coef if c) < 2:
            continue
        extra.append(tuple(sum(c * b[i] for c, b in zip(coef, basis)) for i in range(n)))
    vectors = basis + extra
    rng.shuffle(vectors)
    return VectorConfig(tuple(vectors)), n


@criterion(9, "50 random simplex configurations give an empty graph and zero bounds")
def test_criterion_9_simplex():
    rng = random.Random(5)
    for _ in range(50):
        A, n = _simplex_config(rng)
        an = analyze(A, config_height(A))
        assert an.cone.t == n
        assert not an.gens and an.graph.num_edges == 0
        assert an.b == 0 and an.c == 0
