"""Sublattices of Z^m, their saturation, positivity and the grading configuration."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidInput, NotPositive, NotStronglyConvex
from .exact import _snf, hermite_normal_form, integer_direction, rank, solve_integer, transpose
from .lp import LPProblem, Status, lp_solve


@dataclass(frozen=True)
class Lattice:
    """The lattice spanned by the rows of ``basis`` inside Z^m."""

    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.basis)
        object.__setattr__(self, "basis", rows)
        if not rows:
            raise InvalidInput("a lattice needs at least one generator")
        m = len(rows[0])
        if any(len(r) != m for r in rows):
            raise InvalidInput("lattice generators have different lengths")
        if rank(rows) != len(rows):
            raise InvalidInput("lattice generators must be linearly independent")
        if len(rows) >= m:
            # zero-dimensional quotient; see the decisions log
            raise InvalidInput(f"rank(L) = {len(rows)} must be smaller than m = {m}")

    @property
    def m(self) -> int:
        return len(self.basis[0])

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        return solve_integer(transpose(self.basis), list(v)) is not None

    def hnf(self) -> list[list[int]]:
        return hermite_normal_form(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.hnf() == other.hnf()

    def __hash__(self):
        return hash(tuple(map(tuple, self.hnf())))


@dataclass(frozen=True)
class VectorConfig:
    """The vectors a_1..a_m in Z^n that grade the polynomial ring.

    Construction rejects zero vectors and configurations whose positive hull
    contains a line.
    """

    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        vecs = tuple(tuple(int(x) for x in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if not vecs:
            raise InvalidInput("a configuration needs at least one vector")
        n = len(vecs[0])
        if n == 0 or any(len(v) != n for v in vecs):
            raise InvalidInput("configuration vectors must share a positive length")
        for i, v in enumerate(vecs):
            if not any(v):
                raise InvalidInput(f"vector a_{i} is zero")
        witness = nonnegative_dependency(vecs)
        if witness is not None:
            raise NotStronglyConvex(witness)

    @property
    def m(self) -> int:
        return len(self.vectors)

    @property
    def n(self) -> int:
        return len(self.vectors[0])

    def matrix(self) -> list[list[int]]:
        """The n x m matrix whose columns are the a_i."""
        return transpose(self.vectors)


def nonnegative_dependency(vectors: Sequence[Sequence[int]]) -> Optional[tuple[int, ...]]:
    """A nonzero nonnegative integer vector lam with sum lam_i a_i = 0, if any."""
    m = len(vectors)
    n = len(vectors[0])
    eq = [[vectors[i][k] for i in range(m)] for k in range(n)]
    eq.append([1] * m)
    out = lp_solve(LPProblem(m, eq_rows=eq, eq_rhs=[0] * n + [1], nonneg=range(m)))
    if out.status is Status.INFEASIBLE:
        return None
    return integer_direction(out.witness)


def saturate(L: Lattice) -> Lattice:
    """Sat(L): integer vectors with a nonzero multiple in L, as an HNF basis."""
    _, _, _, Vinv = _snf(L.basis)
    return Lattice(tuple(map(tuple, hermite_normal_form(Vinv[: L.rank]))))


def positive_witness(L: Lattice) -> Optional[tuple[int, ...]]:
    """A nonzero element of L with nonnegative coordinates, or None."""
    r, m = L.rank, L.m
    cols = transpose(L.basis)  # m rows of length r: x_i = sum_k y_k b_k[i]
    ge = [list(c) for c in cols] + [[sum(c[k] for c in cols) for k in range(r)]]
    out = lp_solve(LPProblem(r, ge_rows=ge, ge_rhs=[0] * m + [1]))
    if out.status is Status.INFEASIBLE:
        return None
    y = integer_direction(out.witness)
    return tuple(sum(y[k] * L.basis[k][i] for k in range(r)) for i in range(m))


def is_positive(L: Lattice) -> bool:
    """True iff L meets N^m only in the origin."""
    return positive_witness(L) is None


def quotient_config(L: Lattice) -> VectorConfig:
    """Images a_i of the unit vectors under Z^m / Sat(L) = Z^n, n = m - rank(L)."""
    w = positive_witness(L)
    if w is not None:
        raise NotPositive(w)
    _, _, V, _ = _snf(L.basis)
    r = L.rank
    return VectorConfig(tuple(tuple(row[r:]) for row in V))


def kernel_lattice(A: VectorConfig) -> Lattice:
    """Saturated lattice {u in Z^m : sum u_i a_i = 0} of a configuration."""
    M = A.matrix()
    _, D, V, _ = _snf(M)
    rk = sum(1 for i in range(min(len(D), A.m)) if D[i][i] != 0)
    basis = [[V[i][j] for i in range(A.m)] for j in range(rk, A.m)]
    if not basis:
        raise InvalidInput("the configuration has a trivial relation lattice")
    return Lattice(tuple(map(tuple, hermite_normal_form(basis))))


def height(L: Lattice) -> int:
    """Height of the lattice ideal, which equals rank(L)."""
    return L.rank


def config_height(A: VectorConfig) -> int:
    return A.m - rank(A.vectors)


def binomial_in_ideal(u: Sequence[int], v: Sequence[int], L: Lattice) -> bool:
    """Whether x^u - x^v lies in the lattice ideal of L (trivial character)."""
    if len(u) != L.m or len(v) != L.m:
        raise InvalidInput("exponent vectors must have length m")
    if any(x < 0 for x in u) or any(x < 0 for x in v):
        raise InvalidInput("exponents must be nonnegative")
    return L.contains([a - b for a, b in zip(u, v)])

