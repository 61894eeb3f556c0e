"""Polynomials over Q as exponent-vector term maps, A-gradings, and the
subgraphs of G_sigma that a polynomial set induces."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from ._parallel import pmap
from .cone import ConeModel
from .errors import InvalidInput
from .graph import SigmaGraph
from .lattice import VectorConfig
from .stanley_reisner import SRGenerator

Mono = tuple[int, ...]


def deglex_key(mono: Mono):
    return (sum(mono), mono)


class Poly:
    """A polynomial in m variables: a mapping monomial -> nonzero Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Union[Mapping, Iterable] = ()):
        self.nvars = nvars
        acc: dict[Mono, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else ((m, c) for c, m in terms)
        for mono, coef in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise InvalidInput(f"monomial {mono} does not have {nvars} exponents")
            if any(e < 0 for e in mono):
                raise InvalidInput(f"negative exponent in {mono}")
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(coef)
        self.terms = {m: c for m, c in acc.items() if c != 0}

    @classmethod
    def monomial(cls, exps: Sequence[int], coef=1) -> "Poly":
        return cls(len(exps), {tuple(exps): coef})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(e)

    def monomials(self) -> list[Mono]:
        """Monomials in decreasing degree-lexicographic order."""
        return sorted(self.terms, key=deglex_key, reverse=True)

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def is_standard_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def _coerce(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return Poly.monomial((0,) * self.nvars, other)
        if self.nvars != other.nvars:
            raise InvalidInput("polynomials live in rings with different variable counts")
        return other

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other: Union["Poly", int, Fraction]) -> "Poly":
        if not isinstance(other, Poly):
            return Poly(self.nvars, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out = Poly.monomial((0,) * self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        names = names or [f"x{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for k, mono in enumerate(self.monomials()):
            c = self.terms[mono]
            mag = abs(c)
            factors = [names[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(mono) if e]
            body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self.to_text()})"

    def to_json(self) -> list[dict]:
        return [{"c": str(self.terms[m]), "e": list(m)} for m in self.monomials()]

    @classmethod
    def from_json(cls, nvars: int, data: Sequence[Mapping]) -> "Poly":
        terms = []
        for t in data:
            if not isinstance(t, Mapping) or "c" not in t or "e" not in t:
                raise InvalidInput("each term needs keys 'c' and 'e'")
            try:
                coef = Fraction(str(t["c"]))
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidInput(f"bad coefficient {t['c']!r}") from exc
            e = t["e"]
            if not isinstance(e, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in e):
                raise InvalidInput(f"exponent vector must be a list of integers, got {e!r}")
            terms.append((coef, tuple(e)))
        return cls(nvars, terms)


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR = re.compile(r"^x(\d)(\d)(?:\^(\d+))?$")


def parse_an_poly(text: str, n: int) -> Poly:
    """Parse e.g. ``"x12^2*x31 - x13^2*x21"`` with variables x_ij of A_n (n <= 9).

    Coefficients may appear as a leading integer or ``p/q`` factor.
    """
    if not 2 <= n <= 9:
        raise InvalidInput("textual polynomials need 2 <= n <= 9")
    index = {}
    k = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                index[(i, j)] = k
                k += 1
    m = len(index)
    s = text.strip()
    if not s:
        raise InvalidInput("empty polynomial")
    terms = []
    pos = 0
    first = True
    while pos < len(s):
        match = _TERM.match(s, pos)
        if not match or match.end() == pos:
            raise InvalidInput(f"cannot parse polynomial near {s[pos:]!r}")
        sign, body = match.group(1), match.group(2).strip()
        if sign is None and not first:
            raise InvalidInput(f"missing operator near {body!r}")
        first = False
        coef = Fraction(-1 if sign == "-" else 1)
        exps = [0] * m
        for factor in body.split("*"):
            factor = factor.strip()
            fm = _FACTOR.match(factor)
            if fm:
                i, j = int(fm.group(1)), int(fm.group(2))
                if (i, j) not in index:
                    raise InvalidInput(f"no variable x{i}{j} for n = {n}")
                exps[index[(i, j)]] += int(fm.group(3) or 1)
                continue
            try:
                coef *= Fraction(factor)
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidInput(f"bad factor {factor!r}") from exc
        terms.append((coef, tuple(exps)))
        pos = match.end()
    return Poly(m, terms)


# --------------------------------------------------------------------------
# A-grading


def a_degree(mono: Sequence[int], A: VectorConfig) -> tuple[int, ...]:
    if len(mono) != A.m:
        raise InvalidInput(f"monomial has {len(mono)} exponents, configuration has {A.m} vectors")
    return tuple(sum(u * a[k] for u, a in zip(mono, A.vectors)) for k in range(A.n))


def homogeneous_components(F: Poly, A: VectorConfig) -> list[Poly]:
    groups: dict[tuple[int, ...], dict] = {}
    for mono, c in F.terms.items():
        groups.setdefault(a_degree(mono, A), {})[mono] = c
    return [Poly(F.nvars, groups[d]) for d in sorted(groups)]


def is_a_homogeneous(F: Poly, A: VectorConfig) -> bool:
    return len({a_degree(m, A) for m in F.terms}) <= 1


# --------------------------------------------------------------------------
# cone(N)


@dataclass(frozen=True)
class ConeTrace:
    """Rays T that every ray-set covering A_N must contain.

    ``exact`` is True when pos(T) itself covers A_N; then T is the unique
    ray-set M with cone(N) = pos(M).  Otherwise cone(N) is generated by a
    proper superset of T's rays in no way that a single ray-set can match.
    """

    rays: frozenset
    exact: bool

    @property
    def tag(self) -> str:
        return "exact" if self.exact else "proper-superset-of-simplex-test"


def cone_trace(mono: Sequence[int], cone: ConeModel) -> ConeTrace:
    """T = {r : A_N is not inside pos(rays without r)} for the support A_N of N.

    cone(N) = pos(M) for a ray-set M exactly when M = T and A_N lies in
    pos(T): if pos(M) covers A_N then each ray of M survives every covering
    ray-set (so M is inside T), while pos(rays without r) covers A_N for
    every r outside T.
    """
    support = [i for i, e in enumerate(mono) if e]
    if not support:
        return ConeTrace(frozenset(), True)
    on_rays = [cone.ray_of_generator[i] for i in support]
    if all(r is not None for r in on_rays):
        return ConeTrace(frozenset(on_rays), True)
    vecs = {cone.config.vectors[i] for i in support}
    everything = cone.all_rays()
    T = set()
    for r in range(cone.t):
        rest = everything - {r}
        if any(cone.member_pos(a, rest) is None for a in vecs):
            T.add(r)
    exact = all(cone.member_pos(a, T) is not None for a in vecs)
    return ConeTrace(frozenset(T), exact)


def _vertex_index(graph: SigmaGraph) -> dict[frozenset, int]:
    return {frozenset(v.rays): k for k, v in enumerate(graph.vertices)}


def poly_subgraph(F: Poly, cone: ConeModel, graph: SigmaGraph) -> tuple[int, ...]:
    """Vertices M of G_sigma with cone(N) = pos(M) for some monomial N of F."""
    index = _vertex_index(graph)
    out = set()
    for mono in F.terms:
        tr = cone_trace(mono, cone)
        if tr.exact and tr.rays in index:
            out.add(index[tr.rays])
    return tuple(sorted(out))


@dataclass
class PolyCover:
    index: int
    vertices: tuple[int, ...]
    complete: bool
    a_homogeneous: bool


@dataclass
class CoverReport:
    per_poly: list[PolyCover]
    union_vertices: tuple[int, ...]
    spanning: bool
    uncovered: list[SRGenerator]
    diagnostics: list[str] = field(default_factory=list)


def check_cover(
    polys: Sequence[Poly], cone: ConeModel, graph: SigmaGraph, threads: Optional[int] = 1
) -> CoverReport:
    """Union of the subgraphs G_sigma(F_i); a set of polynomials generating the
    ideal up to radical must span G_sigma.  A-homogeneous inputs must induce
    complete subgraphs; a violation is reported as an internal error."""
    m = cone.config.m
    for k, F in enumerate(polys):
        if F.nvars != m:
            raise InvalidInput(f"polynomial {k} has {F.nvars} variables, expected {m}")
    subs = pmap(lambda F: poly_subgraph(F, cone, graph), polys, threads)
    per_poly = []
    diagnostics = []
    union: set[int] = set()
    for k, (F, verts) in enumerate(zip(polys, subs)):
        complete = all(graph.adjacent(a, b) for a in verts for b in verts if a < b)
        homog = is_a_homogeneous(F, cone.config)
        if homog and not complete:
            diagnostics.append(
                f"internal error: A-homogeneous polynomial {k} induces a non-complete subgraph"
            )
        per_poly.append(PolyCover(k, verts, complete, homog))
        union.update(verts)
    uncovered = [graph.vertices[v] for v in range(len(graph.vertices)) if v not in union]
    return CoverReport(per_poly, tuple(sorted(union)), not uncovered, uncovered, diagnostics)
