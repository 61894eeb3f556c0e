import pytest

from srbound.family import (
    AnSpec,
    ExpectedCounts,
    InvalidN,
    an_config,
    face_pattern,
    binomial_generators,
    homogeneous_generators,
    verify_an,
)
from srbound.cone import extreme_rays
from srbound.lattice import binomial_in_ideal, kernel_lattice
from srbound.poly import a_degree, is_a_homogeneous, parse_an_poly
from srbound.stanley_reisner import minimal_nonfaces


def test_an_config():
    assert an_config(2).vectors == ((2, 1), (1, 2))
    A3 = an_config(3)
    assert A3.m == 6 and (2, 1, 0) in A3.vectors and (0, 1, 2) in A3.vectors
    assert an_config(4).m == 12
    with pytest.raises(InvalidN):
        an_config(1)
    s = AnSpec(4)
    assert [s.index(i, j) for i, j in s.pairs()] == list(range(12))


def test_generating_set_sizes():
    assert len(binomial_generators(3)) == 5 and len(binomial_generators(4)) == 26
    assert len(homogeneous_generators(3)) == 4 and len(homogeneous_generators(4)) == 22
    with pytest.raises(InvalidN):
        binomial_generators(2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_sets_lie_in_toric_ideal(n):
    A = an_config(n)
    L = kernel_lattice(A)
    for f in binomial_generators(n):
        assert len(f.terms) == 2 and sorted(f.terms.values()) == [-1, 1]
        u, v = sorted(f.terms, key=lambda m: f.terms[m])
        assert binomial_in_ideal(u, v, L)
    for f in homogeneous_generators(n):
        assert is_a_homogeneous(f, A)
    assert len(set(binomial_generators(n))) == len(binomial_generators(n))


def test_four_term_degree():
    f = parse_an_poly("x12^3*x32^3 - x23^3*x13^3 + x31^3*x21^3 - x12^2*x31^2*x23^2", 3)
    assert f in homogeneous_generators(3)
    assert {a_degree(m, an_config(3)) for m in f.terms} == {(6, 6, 6)}


def test_expected_counts():
    e = ExpectedCounts.for_n(10)
    assert (e.b, e.c, e.height) == (1860, 1740, 80)
    e = ExpectedCounts.for_n(4)
    assert (e.vertices, e.edges, e.components, e.b, e.c, e.rays, e.height) == (48, 78, 5, 26, 22, 12, 8)


def test_face_patterns():
    cone = extreme_rays(an_config(4))
    _, lattice = minimal_nonfaces(cone)
    assert all(face_pattern(cone, f) is not None for f in lattice.faces)
    r = lambda i, j: cone.rays.index(AnSpec(4).vector(i, j))
    assert face_pattern(cone, [r(1, 2), r(3, 2)]) is None


@pytest.mark.parametrize("n", [3, 4])
def test_verify_an(n):
    rep = verify_an(n, groebner=(n == 3), faces=True)
    assert rep.passed, rep.table()
    assert "FAIL" not in rep.table()


def test_verify_an_rejects_small_n():
    with pytest.raises(InvalidN):
        verify_an(2)
