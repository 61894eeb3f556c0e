import pytest

from srbound.errors import ResourceLimit
from srbound.family import AnSpec, fifth_power_instance
from srbound.groebner import groebner_basis, groebner_member
from srbound.poly import Poly


def var(n, i):
    return Poly.variable(n, i)


def test_principal_and_linear_ideals():
    x, y, z = (var(3, i) for i in range(3))
    assert groebner_member(x, [x])
    assert not groebner_member(x, [y])
    assert groebner_member(x * y + z * y, [x + z])
    assert not groebner_member(x + y, [x - z])
    assert groebner_member(2 * x - 3 * y, [x + y, y - z, z])
    assert groebner_member(Poly(3), [x])


def test_regression_list():
    x, y, z = (var(3, i) for i in range(3))
    # twisted cubic: y^2 - xz lies in (xz - y^2, ...), x^2 z - y^3 not in (y)
    cubic = [x * z - y * y, x * y - z, y * y - x * z]
    assert groebner_member(y * y * y - x * y * z, cubic)
    assert not groebner_member(x, cubic)
    # non-homogeneous input exercises the untruncated completion
    assert groebner_member(y ** 3 - 1, [x - 1, y ** 3 - x])
    assert not groebner_member(y - 1, [x - 1, y ** 3 - x])


def test_basis_reduces_generators_to_zero():
    x, y = var(2, 0), var(2, 1)
    G = groebner_basis([x * x * y - 1, x * y * y - x])
    from srbound.groebner import _lead, reduce

    terms = [g.terms for g in G]
    leads = [_lead(t) for t in terms]
    for f in (x * x * y - 1, x * y * y - x):
        assert not reduce(f.terms, terms, leads)


def test_fifth_power_membership():
    f, gens = fifth_power_instance(3)
    assert groebner_member(f, gens)
    # the fourth power is not in the ideal, so the exponent 5 is not slack
    s = AnSpec(3)
    q = s.poly((1, [(1, 2, 1), (3, 2, 1)]), (-1, [(2, 3, 1), (1, 3, 1)]))
    assert q ** 5 == f
    assert not groebner_member(q ** 4, gens)


def test_resource_limit():
    f, gens = fifth_power_instance(3)
    with pytest.raises(ResourceLimit):
        groebner_member(f, gens, max_basis=6)
