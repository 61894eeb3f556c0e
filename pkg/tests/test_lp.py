from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import fm_feasible, fm_max
from srbound.lp import LPProblem, Status, lp_solve


def test_infeasible_pair():
    out = lp_solve(LPProblem(1, ge_rows=[[1], [-1]], ge_rhs=[1, 0]))
    assert out.status is Status.INFEASIBLE
    u, v = out.farkas
    assert out.farkas is not None and all(x >= 0 for x in v)


def test_bounded_maximum():
    out = lp_solve(LPProblem(1, ge_rows=[[1], [-1]], ge_rhs=[0, -1], objective=[1]))
    assert out.status is Status.OPTIMAL and out.value == 1


def test_relint_feasibility_example():
    # l1 (2,1,0) + l2 (0,1,2) = (2,2,2) with l >= 1
    p = LPProblem(2, eq_rows=[[2, 0], [1, 1], [0, 2]], eq_rhs=[2, 2, 2], ge_rows=[[1, 0], [0, 1]], ge_rhs=[1, 1])
    out = lp_solve(p)
    assert out.status is Status.FEASIBLE and out.witness == (1, 1)


def test_unbounded():
    out = lp_solve(LPProblem(2, ge_rows=[[1, -1]], ge_rhs=[0], objective=[1, 1], nonneg={0, 1}))
    assert out.status is Status.UNBOUNDED


def test_rational_data_and_redundant_rows():
    p = LPProblem(
        2,
        eq_rows=[[Fraction(1, 2), Fraction(1, 3)], [1, Fraction(2, 3)]],
        eq_rhs=[1, 2],
        nonneg={0, 1},
        objective=[1, 0],
    )
    out = lp_solve(p)
    assert out.status is Status.OPTIMAL and out.value == 2


def test_shape_checks():
    with pytest.raises(ValueError):
        LPProblem(2, eq_rows=[[1]], eq_rhs=[0])
    with pytest.raises(ValueError):
        LPProblem(2, ge_rows=[[1, 1]], ge_rhs=[])


coef = st.integers(-3, 3)


@st.composite
def problems(draw):
    nv = draw(st.integers(1, 4))
    neq = draw(st.integers(0, 2))
    nge = draw(st.integers(0, 6 - neq))
    eq = [draw(st.lists(coef, min_size=nv, max_size=nv)) for _ in range(neq)]
    ge = [draw(st.lists(coef, min_size=nv, max_size=nv)) for _ in range(nge)]
    return LPProblem(
        nv,
        eq_rows=eq,
        eq_rhs=[draw(coef) for _ in eq],
        ge_rows=ge,
        ge_rhs=[draw(coef) for _ in ge],
        nonneg=frozenset(draw(st.sets(st.integers(0, nv - 1)))),
        objective=draw(st.none() | st.lists(coef, min_size=nv, max_size=nv)),
    )


def _as_ge(p):
    rows, rhs = [], []
    for r, b in zip(p.eq_rows, p.eq_rhs):
        rows += [list(r), [-x for x in r]]
        rhs += [b, -b]
    rows += [list(r) for r in p.ge_rows]
    rhs += list(p.ge_rhs)
    for j in p.nonneg:
        e = [0] * p.num_vars
        e[j] = 1
        rows.append(e)
        rhs.append(0)
    return rows, rhs


@settings(max_examples=300, deadline=None, derandomize=True)
@given(problems())
def test_agrees_with_fourier_motzkin(p):
    out = lp_solve(p)
    rows, rhs = _as_ge(p)
    if p.objective is None:
        assert (out.status is Status.FEASIBLE) == fm_feasible(rows, rhs)
    else:
        ref = fm_max(rows, rhs, p.objective)
        if ref is None:
            assert out.status is Status.INFEASIBLE
        elif ref == "unbounded":
            assert out.status is Status.UNBOUNDED
        else:
            assert out.status is Status.OPTIMAL and out.value == ref
    if out.witness is not None:
        assert p.residual_ok(out.witness)
    if out.status is Status.INFEASIBLE:
        assert p.farkas_ok(*out.farkas)


@settings(max_examples=50, deadline=None, derandomize=True)
@given(problems())
def test_deterministic(p):
    assert lp_solve(p) == lp_solve(p)
