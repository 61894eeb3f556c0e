import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srbound import kernel
from srbound._pykernel import PyTableau
from srbound.kernel import Tableau

compiled = pytest.mark.skipif(not kernel.HAVE_COMPILED, reason="compiled kernel not built")


@pytest.fixture
def backend():
    saved = kernel.get_backend()
    yield kernel.set_backend
    kernel.set_backend(saved)


def test_python_pivot_is_fraction_free():
    T = PyTableau([[2, 1, 4], [1, 3, 5]])
    T.pivot(0, 0)
    assert T.denom == 2
    assert T.tolists() == [[2, 1, 4], [0, 5, 6]]


@compiled
@settings(max_examples=100, deadline=None, derandomize=True)
@given(st.lists(st.lists(st.integers(-20, 20), min_size=5, max_size=5), min_size=4, max_size=4),
       st.lists(st.tuples(st.integers(0, 3), st.integers(0, 4)), max_size=6))
def test_backends_pivot_identically(rows, pivots):
    a = PyTableau(rows)
    b = Tableau(rows)
    assert b.compiled
    for r, s in pivots:
        if a.get(r, s) == 0:
            continue
        a.pivot(r, s)
        b.pivot(r, s)
        assert a.tolists() == b.tolists() and a.denom == b.denom


@compiled
def test_overflow_hands_over_to_python():
    big = 2 ** 40
    T = Tableau([[big, 1], [1, big]])
    T.pivot(0, 0)
    T.pivot(1, 1)
    ref = PyTableau([[big, 1], [1, big]])
    ref.pivot(0, 0)
    ref.pivot(1, 1)
    assert T.tolists() == ref.tolists()
    assert not T.compiled
    huge = Tableau([[2 ** 70, 1]])
    assert not huge.compiled


def test_set_backend_validates(backend):
    with pytest.raises(ValueError):
        backend("fortran")
    backend("python")
    assert kernel.get_backend() == "python"
    assert not Tableau([[1, 2]]).compiled


@compiled
def test_pipeline_identical_across_backends(backend):
    from srbound.family import an_config
    from srbound.report import analyze, to_json

    results = []
    for name in ("python", "compiled"):
        backend(name)
        an = analyze(an_config(4), 8)
        results.append(to_json(an, {"kind": "family"}))
    assert results[0] == results[1]
