from itertools import combinations

from hypothesis import given, settings

from oracles import independent, minimal_nonfaces_oracle
from srbound.cone import extreme_rays
from srbound.family import an_config
from srbound.stanley_reisner import SRGenerator, minimal_nonfaces, sr_generator_count_formula_An
from test_cone import configs


def _shape(cone, gen):
    (i1, j1), (i2, j2) = [(v.index(2), v.index(1)) for v in (cone.rays[r] for r in gen.rays)]
    return "same second" if j1 == j2 else "chain"


def test_a3_generators():
    cone = extreme_rays(an_config(3))
    gens, lattice = minimal_nonfaces(cone)
    assert len(gens) == 9 and all(len(g) == 2 for g in gens)
    shapes = [_shape(cone, g) for g in gens]
    assert shapes.count("same second") == 3 and shapes.count("chain") == 6
    assert () in lattice.faces and all((j,) in lattice.faces for j in range(6))


def test_simplex_and_square():
    assert minimal_nonfaces(extreme_rays([(1, 0), (0, 1)]))[0] == []
    cone = extreme_rays([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
    gens = minimal_nonfaces(cone)[0]
    assert gens == [SRGenerator((0, 3)), SRGenerator((1, 2))]
    assert {cone.rays[0], cone.rays[3]} == {(0, 0, 1), (1, 1, 1)}


def test_count_formula():
    assert sr_generator_count_formula_An(3) == 9
    assert sr_generator_count_formula_An(4) == 48
    assert sr_generator_count_formula_An(2) == 0


def test_generator_invariants_a4():
    cone = extreme_rays(an_config(4))
    gens, lattice = minimal_nonfaces(cone, threads=3)
    assert gens == sorted(gens) and len(gens) == 48
    for g in gens:
        assert not cone.is_face(g.rays)
        for k in range(1, len(g)):
            for sub in combinations(g.rays, k):
                assert cone.is_face(sub)
        assert independent([cone.rays[r] for r in g.rays])
    for f in lattice.faces:
        assert cone.is_face(f)
    assert minimal_nonfaces(cone, threads=1)[0] == gens


@settings(max_examples=120, deadline=None, derandomize=True)
@given(configs(n_max=3, m_max=6))
def test_matches_subset_enumeration(vs):
    cone = extreme_rays(vs)
    gens, _ = minimal_nonfaces(cone)
    assert [g.rays for g in gens] == minimal_nonfaces_oracle(cone.rays)
