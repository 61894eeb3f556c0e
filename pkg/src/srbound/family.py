"""The configurations A_n = {2e_i + e_j : i != j}, their known generating
sets, and a harness checking every computed quantity against closed forms."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional

from .cone import ConeModel, extreme_rays
from .errors import InvalidInput
from .graph import DEFAULT_CLIQUE_CAP, SigmaGraph, bound_b, bound_c, build_graph
from .groebner import groebner_member
from .lattice import VectorConfig, binomial_in_ideal, config_height, kernel_lattice
from .poly import Poly, check_cover, is_a_homogeneous
from .stanley_reisner import FaceLattice, minimal_nonfaces, sr_generator_count_formula_An


class InvalidN(InvalidInput):
    pass


@dataclass(frozen=True)
class AnSpec:
    """Variables x_ij (1-based, i != j) flattened in (i, j)-lexicographic order."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise InvalidN(f"A_n needs n >= 2, got {self.n}")

    @property
    def m(self) -> int:
        return self.n * (self.n - 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1) if i != j]

    def index(self, i: int, j: int) -> int:
        if i == j or not (1 <= i <= self.n and 1 <= j <= self.n):
            raise InvalidN(f"no variable x_{i}{j} for n = {self.n}")
        return (i - 1) * (self.n - 1) + (j - 1 if j < i else j - 2)

    def names(self) -> list[str]:
        sep = "" if self.n <= 9 else "_"
        return [f"x{i}{sep}{j}" for i, j in self.pairs()]

    def vector(self, i: int, j: int) -> tuple[int, ...]:
        v = [0] * self.n
        v[i - 1] += 2
        v[j - 1] += 1
        return tuple(v)

    def mono(self, *factors: tuple[int, int, int]) -> tuple[int, ...]:
        """Exponent vector of prod x_ij^e for factors (i, j, e)."""
        e = [0] * self.m
        for i, j, k in factors:
            e[self.index(i, j)] += k
        return tuple(e)

    def poly(self, *terms) -> Poly:
        """Poly from (coef, [(i, j, e), ...]) pairs, negated if needed so the
        leading degree-lexicographic term is positive."""
        p = Poly(self.m, [(c, self.mono(*f)) for c, f in terms])
        return -p if p.terms[p.monomials()[0]] < 0 else p


def an_config(n: int) -> VectorConfig:
    spec = AnSpec(n)
    return VectorConfig(tuple(spec.vector(i, j) for i, j in spec.pairs()))


def _require3(n: int) -> AnSpec:
    spec = AnSpec(n)
    if n < 3:
        raise InvalidN(f"generating sets are defined for n >= 3, got {n}")
    return spec


def _cubics(s: AnSpec, a: int, b: int, c: int) -> list[Poly]:
    # x_ij^2 x_ki - x_ik^2 x_ji for each i of the triple; (i, j, k) and
    # (i, k, j) give the same binomial up to sign, so take j < k
    out = []
    for i in (a, b, c):
        j, k = [x for x in (a, b, c) if x != i]
        out.append(s.poly((1, [(i, j, 2), (k, i, 1)]), (-1, [(i, k, 2), (j, i, 1)])))
    return out


def _quadrics(s: AnSpec, a: int, b: int, c: int) -> list[Poly]:
    # the three monomials x_ij x_kj of degree 2(e_a+e_b+e_c) differ pairwise by
    # x_ij x_kj - x_jk x_ik; two differences span all three, so both are
    # taken against the monomial with repeated index c
    m_c = [(a, c, 1), (b, c, 1)]
    return [
        s.poly((1, [(a, b, 1), (c, b, 1)]), (-1, m_c)),
        s.poly((1, [(b, a, 1), (c, a, 1)]), (-1, m_c)),
    ]


def _four_set(s: AnSpec, quad: tuple[int, ...]) -> list[Poly]:
    # x_ij x_kl - x_il x_kj: one binomial per doubled pair {i, k}
    out = []
    for i, k in combinations(quad, 2):
        j, l = [x for x in quad if x not in (i, k)]
        out.append(s.poly((1, [(i, j, 1), (k, l, 1)]), (-1, [(i, l, 1), (k, j, 1)])))
    return out


def _four_term(s: AnSpec, i: int, j: int, k: int) -> Poly:
    return s.poly(
        (1, [(i, j, 3), (k, j, 3)]),
        (-1, [(j, k, 3), (i, k, 3)]),
        (1, [(k, i, 3), (j, i, 3)]),
        (-1, [(i, j, 2), (k, i, 2), (j, k, 2)]),
    )


def binomial_generators(n: int) -> list[Poly]:
    """Binomials generating the toric ideal of A_n up to radical:
    per triple 2 quadrics and 3 cubics, per 4-set 6 quadrics."""
    s = _require3(n)
    out = []
    for t in combinations(range(1, n + 1), 3):
        block = _quadrics(s, *t) + _cubics(s, *t)
        assert len(set(block)) == 5
        out += block
    for q in combinations(range(1, n + 1), 4):
        out += _four_set(s, q)
    assert len(out) == 5 * comb(n, 3) + 6 * comb(n, 4)
    return out


def homogeneous_generators(n: int) -> list[Poly]:
    """A-homogeneous polynomials generating the toric ideal of A_n up to
    radical: per triple 3 cubics and one four-term sextic, per 4-set 6 quadrics."""
    s = _require3(n)
    out = []
    for t in combinations(range(1, n + 1), 3):
        out += _cubics(s, *t) + [_four_term(s, *t)]
    for q in combinations(range(1, n + 1), 4):
        out += _four_set(s, q)
    assert len(out) == 4 * comb(n, 3) + 6 * comb(n, 4)
    return out


# names under which the two sets are exported
prop53_binomials = binomial_generators
prop55_polys = homogeneous_generators


def fifth_power_instance(n: int = 3, triple=(1, 2, 3)) -> tuple[Poly, list[Poly]]:
    """(x_ij x_kj - x_jk x_ik)^5 and the triple's four sextic/cubic generators."""
    s = _require3(n)
    i, j, k = triple
    q = s.poly((1, [(i, j, 1), (k, j, 1)]), (-1, [(j, k, 1), (i, k, 1)]))
    return q ** 5, _cubics(s, i, j, k) + [_four_term(s, i, j, k)]


@dataclass(frozen=True)
class ExpectedCounts:
    vertices: int
    edges: int
    components: int
    b: int
    c: int
    rays: int
    height: int

    @classmethod
    def for_n(cls, n: int) -> "ExpectedCounts":
        c3, c4 = comb(n, 3), comb(n, 4)
        return cls(
            vertices=9 * c3 + 12 * c4,
            edges=15 * c3 + 18 * c4,
            components=c3 + c4,
            b=5 * c3 + 6 * c4,
            c=4 * c3 + 6 * c4,
            rays=n * (n - 1),
            height=n * (n - 2),
        )


@dataclass
class Claim:
    name: str
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


@dataclass
class Verification:
    n: int
    claims: list[Claim] = field(default_factory=list)
    timing: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def add(self, name, expected, computed):
        self.claims.append(Claim(name, expected, computed))

    def table(self) -> str:
        w = max((len(c.name) for c in self.claims), default=5)
        lines = [f"{'claim':<{w}}  {'expected':>10}  {'computed':>10}  result"]
        for c in self.claims:
            lines.append(
                f"{c.name:<{w}}  {str(c.expected):>10}  {str(c.computed):>10}  "
                + ("pass" if c.passed else "FAIL")
            )
        return "\n".join(lines)


def index_support(cone: ConeModel, rays) -> frozenset:
    """Coordinates touched by the given rays of an A_n cone."""
    return frozenset(k for r in rays for k, x in enumerate(cone.rays[r]) if x)


def face_pattern(cone: ConeModel, face) -> Optional[str]:
    """Name the face as F_{i,T} or F_T (0-based indices), or None.

    F_{i,T} has rays 2e_i + e_k (k in T); F_T has all 2e_p + e_q with p, q in T.
    """
    vecs = [cone.rays[r] for r in face]
    if not vecs:
        return "0"
    pairs = set()
    for v in vecs:
        i = v.index(2)
        j = v.index(1)
        pairs.add((i, j))
    heads = {i for i, _ in pairs}
    if len(heads) == 1:
        (i,) = heads
        return f"F_{{{i},{sorted(j for _, j in pairs)}}}"
    T = {x for p in pairs for x in p}
    if pairs == {(p, q) for p in T for q in T if p != q}:
        return f"F_{sorted(T)}"
    return None


def _component_structure(cone: ConeModel, g: SigmaGraph) -> tuple[bool, bool, bool]:
    """(index supports have size 3 or 4 and each index set forms exactly one
    component, triple components hold exactly one triangle, quadruple
    components are triangle-free)."""
    comps = g.components()
    supports = []
    supports_ok = True
    for comp in comps:
        sup = {index_support(cone, g.vertices[v].rays) for v in comp}
        if len(sup) != 1:
            supports_ok = False
            continue
        supports.append(next(iter(sup)))
    if len(set(supports)) != len(supports) or any(len(s) not in (3, 4) for s in supports):
        supports_ok = False
    triple_ok = quad_ok = True
    for comp, sup in zip(comps, supports):
        tri = sum(
            1
            for a, b, c in combinations(comp, 3)
            if g.adjacent(a, b) and g.adjacent(a, c) and g.adjacent(b, c)
        )
        if len(sup) == 3 and (tri != 1 or len(comp) != 9):
            triple_ok = False
        if len(sup) == 4 and (tri != 0 or len(comp) != 12):
            quad_ok = False
    return supports_ok, triple_ok, quad_ok


def verify_an(
    n: int,
    counts_only: bool = False,
    groebner: bool = False,
    faces: bool = False,
    cap: int = DEFAULT_CLIQUE_CAP,
    threads: Optional[int] = 1,
) -> Verification:
    """Run the pipeline on A_n and compare against the closed forms."""
    s = _require3(n)
    exp = ExpectedCounts.for_n(n)
    rep = Verification(n)
    clock = time.perf_counter()

    def lap(name):
        nonlocal clock
        now = time.perf_counter()
        rep.timing[name] = now - clock
        clock = now

    A = an_config(n)
    cone = extreme_rays(A)
    rep.add("extreme rays", exp.rays, cone.t)
    rep.add("height", exp.height, config_height(A))
    lap("cone")
    gens, lattice = minimal_nonfaces(cone, threads)
    rep.add("SR generators", exp.vertices, len(gens))
    rep.add("SR count formula", sr_generator_count_formula_An(n), len(gens))
    lap("stanley_reisner")
    g = build_graph(cone, gens, threads)
    rep.add("edges", exp.edges, g.num_edges)
    rep.add("components", exp.components, len(g.components()))
    lap("graph")
    b, _ = bound_b(g, threads)
    c, _ = bound_c(g, cap, threads)
    rep.add("b", exp.b, b)
    rep.add("c", exp.c, c)
    lap("bounds")
    supports_ok, triple_ok, quad_ok = _component_structure(cone, g)
    rep.add("components by index set", True, supports_ok)
    rep.add("triple components: one triangle", True, triple_ok)
    rep.add("quadruple components: triangle-free", True, quad_ok)
    lap("structure")
    if faces:
        bad = [f for f in lattice.faces if face_pattern(cone, f) is None]
        rep.add("touched faces of form F_{i,T} or F_T", 0, len(bad))
        lap("faces")
    if not counts_only:
        bins = binomial_generators(n)
        homs = homogeneous_generators(n)
        rep.add("binomial set size", exp.b, len(bins))
        rep.add("A-homogeneous set size", exp.c, len(homs))
        L = kernel_lattice(A)
        members = 0
        for f in bins:
            u, v = [m for m in f.terms if f.terms[m] > 0], [m for m in f.terms if f.terms[m] < 0]
            members += binomial_in_ideal(u[0], v[0], L)
        rep.add("binomials in the toric ideal", len(bins), members)
        rep.add("A-homogeneous set is homogeneous", len(homs), sum(is_a_homogeneous(f, A) for f in homs))
        cov_bins = check_cover(bins, cone, g, threads)
        rep.add("binomial set spans G_sigma", True, cov_bins.spanning)
        cov_homs = check_cover(homs, cone, g, threads)
        rep.add("A-homogeneous set spans G_sigma", True, cov_homs.spanning)
        rep.add(
            "A-homogeneous subgraphs complete",
            len(homs),
            sum(pc.complete for pc in cov_homs.per_poly),
        )
        lap("covers")
    if groebner:
        # the identity only involves the six variables of one triple
        f, gens3 = fifth_power_instance(3)
        rep.add("(x12*x32 - x23*x13)^5 in ideal", True, groebner_member(f, gens3))
        lap("groebner")
    return rep
