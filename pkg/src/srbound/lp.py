"""Exact two-phase simplex over the rationals.

Problems are stated with free variables, equality rows, ``>=`` rows and an
optional set of variables known to be nonnegative (sign constraints cost no
rows).  Every row is scaled to integers and the tableau is pivoted with
fraction-free integer updates, so all verdicts are exact.  Bland's rule
guarantees termination and makes the result a deterministic function of
the input.

Infeasible outcomes carry a Farkas certificate ``(u, v)`` with ``v >= 0``:
``E^T u + G^T v`` vanishes on free variables and is ``<= 0`` on
nonnegative ones, while ``e.u + g.v > 0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .exact import clear_denominators, dot
from .kernel import Tableau

Vector = tuple[Fraction, ...]


class Status(str, Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"


def _num(x):
    # keep integers as ints: the verification paths below run on integers
    if type(x) is int:
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _rowtuple(rows):
    return tuple(tuple(_num(x) for x in r) for r in rows)


def _scaled(vec: Sequence) -> tuple[list[int], int]:
    """Integers X and a positive d with vec = X / d."""
    den = 1
    for x in vec:
        if not isinstance(x, int):
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in vec], 1
    return [int(x * den) for x in vec], den


@dataclass(frozen=True)
class LPProblem:
    num_vars: int
    eq_rows: tuple = ()
    eq_rhs: tuple = ()
    ge_rows: tuple = ()
    ge_rhs: tuple = ()
    objective: Optional[tuple] = None
    maximize: bool = True
    nonneg: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "eq_rows", _rowtuple(self.eq_rows))
        object.__setattr__(self, "ge_rows", _rowtuple(self.ge_rows))
        object.__setattr__(self, "eq_rhs", tuple(_num(x) for x in self.eq_rhs))
        object.__setattr__(self, "ge_rhs", tuple(_num(x) for x in self.ge_rhs))
        object.__setattr__(self, "nonneg", frozenset(self.nonneg))
        if self.objective is not None:
            object.__setattr__(self, "objective", tuple(Fraction(x) for x in self.objective))
            if len(self.objective) != self.num_vars:
                raise ValueError("objective length differs from the variable count")
        if len(self.eq_rows) != len(self.eq_rhs) or len(self.ge_rows) != len(self.ge_rhs):
            raise ValueError("row and right-hand side counts differ")
        for r in self.eq_rows + self.ge_rows:
            if len(r) != self.num_vars:
                raise ValueError("constraint row width differs from the variable count")
        if any(not 0 <= j < self.num_vars for j in self.nonneg):
            raise ValueError("nonnegativity index out of range")

    def residual_ok(self, x: Sequence[Fraction]) -> bool:
        """True iff x satisfies every constraint exactly."""
        if len(x) != self.num_vars:
            return False
        if any(x[j] < 0 for j in self.nonneg):
            return False
        X, d = _scaled(x)
        if any(dot(r, X) != b * d for r, b in zip(self.eq_rows, self.eq_rhs)):
            return False
        return all(dot(r, X) >= b * d for r, b in zip(self.ge_rows, self.ge_rhs))

    def farkas_ok(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
        """True iff (u, v) certifies infeasibility."""
        if len(u) != len(self.eq_rows) or len(v) != len(self.ge_rows):
            return False
        if any(x < 0 for x in v):
            return False
        # a common positive scale leaves every condition unchanged
        X, _ = _scaled(list(u) + list(v))
        u, v = X[: len(u)], X[len(u):]
        for j in range(self.num_vars):
            s = sum(ui * r[j] for ui, r in zip(u, self.eq_rows))
            s += sum(vi * r[j] for vi, r in zip(v, self.ge_rows))
            if s > 0 or (s != 0 and j not in self.nonneg):
                return False
        return dot(u, self.eq_rhs) + dot(v, self.ge_rhs) > 0


@dataclass(frozen=True)
class LPOutcome:
    status: Status
    witness: Optional[Vector] = None
    value: Optional[Fraction] = None
    farkas: Optional[tuple[Vector, Vector]] = None

    @property
    def feasible(self) -> bool:
        return self.status is not Status.INFEASIBLE


def lp_solve(p: LPProblem) -> LPOutcome:
    """Solve ``p`` exactly.

    Without an objective the result is FEASIBLE (with a witness) or
    INFEASIBLE (with a Farkas certificate).  With an objective it is
    OPTIMAL, UNBOUNDED or INFEASIBLE.
    """
    return _Simplex(p).run()


class _Simplex:
    def __init__(self, p: LPProblem):
        self.p = p
        nv = p.num_vars
        # structural columns: one per nonnegative variable, two per free one
        self.colmap: list[tuple[int, int]] = []
        for j in range(nv):
            self.colmap.append((j, 1))
            if j not in p.nonneg:
                self.colmap.append((j, -1))
        nstruct = len(self.colmap)
        rows_src = [(r, b) for r, b in zip(p.eq_rows, p.eq_rhs)] + [
            (r, b) for r, b in zip(p.ge_rows, p.ge_rhs)
        ]
        n_eq = len(p.eq_rows)
        m = len(rows_src)
        nsurplus = m - n_eq
        self.m = m
        self.nstruct = nstruct
        self.nsurplus = nsurplus
        self.ncore = nstruct + nsurplus  # non-artificial columns
        width = self.ncore + m + 1
        self.rhs = width - 1
        self.row_factor: list[Fraction] = []  # scaled_row = factor * original_row
        tab: list[list[int]] = []
        for i, (r, b) in enumerate(rows_src):
            ints, den = clear_denominators(list(r) + [b])
            coeffs, rhs = ints[:-1], ints[-1]
            sign = -1 if rhs < 0 else 1
            row = [0] * width
            for c, (j, s) in enumerate(self.colmap):
                row[c] = sign * s * coeffs[j]
            if i >= n_eq:
                row[nstruct + i - n_eq] = -sign
            row[self.ncore + i] = 1
            row[self.rhs] = sign * rhs
            self.row_factor.append(Fraction(sign * den))
            tab.append(row)
        # phase-2 objective row (minimisation form) then phase-1 row
        self.obj_scale = 1
        obj = [0] * width
        if p.objective is not None:
            ints, den = clear_denominators(p.objective)
            self.obj_scale = den
            direction = -1 if p.maximize else 1
            for c, (j, s) in enumerate(self.colmap):
                obj[c] = direction * s * ints[j]
        ph1 = [0] * width
        for row in tab:
            for c in range(self.ncore):
                ph1[c] -= row[c]
            ph1[self.rhs] -= row[self.rhs]
        tab.append(obj)
        tab.append(ph1)
        self.T = Tableau(tab)
        self.basis = [self.ncore + i for i in range(m)]

    # -- simplex core ---------------------------------------------------

    def _iterate(self, obj_row: int, ncols: int) -> bool:
        """Bland's rule on ``obj_row``; False when unbounded."""
        T = self.T
        nrows = len(self.basis)
        while True:
            costs = T.row(obj_row)
            s = next((j for j in range(ncols) if costs[j] < 0), None)
            if s is None:
                return True
            col = T.column(s)
            rhs = T.column(self.rhs)
            best = None
            for i in range(nrows):
                a = col[i]
                if a <= 0:
                    continue
                if best is None:
                    best = i
                    continue
                lhs = rhs[i] * col[best]
                rgt = rhs[best] * a
                if lhs < rgt or (lhs == rgt and self.basis[i] < self.basis[best]):
                    best = i
            if best is None:
                return False
            T.pivot(best, s)
            self.basis[best] = s

    def run(self) -> LPOutcome:
        p = self.p
        m = self.m
        T = self.T
        ph1_row = m + 1
        obj_row = m
        self._iterate(ph1_row, self.ncore)
        if T.get(ph1_row, self.rhs) < 0:
            return LPOutcome(Status.INFEASIBLE, farkas=self._farkas())
        # drive remaining artificials out of the basis
        redundant = []
        for i, b in enumerate(self.basis):
            if b < self.ncore:
                continue
            row = T.row(i)
            s = next((j for j in range(self.ncore) if row[j] != 0), None)
            if s is None:
                redundant.append(i)
            else:
                T.pivot(i, s)
                self.basis[i] = s
        if redundant or m:
            keep_rows = [i for i in range(m) if i not in redundant] + [obj_row]
            rows = T.tolists()
            cols = list(range(self.ncore)) + [self.rhs]
            self.T = T = Tableau([[rows[i][j] for j in cols] for i in keep_rows], T.denom)
            self.basis = [self.basis[i] for i in range(m) if i not in redundant]
            self.rhs = self.ncore
        obj_row = len(self.basis)
        if p.objective is None:
            x = self._primal()
            return LPOutcome(Status.FEASIBLE, witness=x)
        if not self._iterate(obj_row, self.ncore):
            return LPOutcome(Status.UNBOUNDED)
        x = self._primal()
        value = dot(p.objective, x)
        return LPOutcome(Status.OPTIMAL, witness=x, value=value)

    def _primal(self) -> Vector:
        T = self.T
        d = T.denom
        rhs = T.column(self.rhs)
        std = [Fraction(0)] * self.ncore
        for i, b in enumerate(self.basis):
            std[b] = Fraction(rhs[i], d)
        x = [Fraction(0)] * self.p.num_vars
        for c, (j, s) in enumerate(self.colmap):
            if std[c]:
                x[j] += s * std[c]
        x = tuple(x)
        assert self.p.residual_ok(x), "simplex witness failed exact re-substitution"
        return x

    def _farkas(self) -> tuple[Vector, Vector]:
        T = self.T
        d = T.denom
        ph1 = T.row(self.m + 1)
        y = [1 - Fraction(ph1[self.ncore + i], d) for i in range(self.m)]
        orig = [yi * f for yi, f in zip(y, self.row_factor)]
        n_eq = len(self.p.eq_rows)
        u, v = tuple(orig[:n_eq]), tuple(orig[n_eq:])
        assert self.p.farkas_ok(u, v), "Farkas certificate failed verification"
        return u, v


def feasible(p: LPProblem) -> bool:
    return lp_solve(p).status is not Status.INFEASIBLE
