"""The pointed rational cone pos_Q(A) and its face oracles.

All questions are answered by small exact LPs.  Strict inequalities are
never handed to the solver; each call site below states how it rescales
them into ``>= 1`` conditions or sign constraints.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import PointOutsideCone
from .exact import dot, integer_direction, primitive, rank
from .lattice import VectorConfig
from .lp import LPProblem, Status, lp_solve

RaySet = frozenset


@dataclass(frozen=True)
class RelintWitness:
    """A common point of two relative interiors, with its coefficients (all >= 1)."""

    point: tuple[Fraction, ...]
    left: tuple[Fraction, ...]
    right: tuple[Fraction, ...]


def _columns_problem(vectors, target, extra_cols=()):
    """Rows of ``sum_j x_j v_j (+ extra) = target`` with x >= 0."""
    cols = list(vectors) + list(extra_cols)
    n = len(target)
    rows = [[c[i] for c in cols] for i in range(n)]
    return LPProblem(len(cols), eq_rows=rows, eq_rhs=list(target), nonneg=range(len(cols)))


def in_positive_hull(v: Sequence, vectors: Sequence[Sequence[int]]) -> Optional[tuple[Fraction, ...]]:
    """Nonnegative coefficients l with sum l_j v_j = v, or None."""
    if not vectors:
        return () if not any(v) else None
    out = lp_solve(_columns_problem(vectors, v))
    return out.witness if out.status is not Status.INFEASIBLE else None


class ConeModel:
    """Extreme rays of pos_Q(A) plus memoised face queries.

    Rays are primitive integer vectors in lexicographic order;
    ``ray_of_generator[i]`` is the ray through ``a_i`` or None when ``a_i``
    lies on no extreme ray.
    """

    def __init__(self, config: VectorConfig, rays, ray_of_generator):
        self.config = config
        self.rays: tuple[tuple[int, ...], ...] = tuple(map(tuple, rays))
        self.ray_of_generator: tuple[Optional[int], ...] = tuple(ray_of_generator)
        self.n = config.n
        self.dim = rank(self.rays)
        self._face_cache: dict[RaySet, Optional[tuple[int, ...]]] = {}
        self._lock = threading.Lock()

    @property
    def t(self) -> int:
        return len(self.rays)

    def all_rays(self) -> RaySet:
        return frozenset(range(self.t))

    def generator_of_ray(self) -> list[int]:
        """Smallest generator index lying on each ray."""
        out: list[Optional[int]] = [None] * self.t
        for i, r in enumerate(self.ray_of_generator):
            if r is not None and out[r] is None:
                out[r] = i
        return out

    # -- membership ------------------------------------------------------

    def member_pos(self, v: Sequence, R: Optional[Iterable[int]] = None):
        """Coefficients (in sorted ray order) writing v in pos(R), or None."""
        ids = sorted(self.all_rays() if R is None else R)
        return in_positive_hull(v, [self.rays[j] for j in ids])

    # -- faces -----------------------------------------------------------

    def face_witness(self, R: Iterable[int]) -> Optional[tuple[int, ...]]:
        """Integer c vanishing exactly on the rays of R and positive on the rest,
        or None when pos(R) is not a face."""
        key = frozenset(R)
        cached = self._face_cache.get(key, False)
        if cached is not False:
            return cached
        result = self._face_lp(key)
        with self._lock:
            return self._face_cache.setdefault(key, result)

    def is_face(self, R: Iterable[int]) -> bool:
        return self.face_witness(R) is not None

    def _face_lp(self, R: RaySet) -> Optional[tuple[int, ...]]:
        # Gordan form: some lam >= 0 over rays outside R with sum lam = 1 lands in
        # span(R) iff no c is zero on R and >= 1 outside.  The Farkas multiplier of
        # the normalisation row rescales the strict inequality to >= 1.
        outside = [j for j in range(self.t) if j not in R]
        inside = sorted(R)
        if not outside:
            return (0,) * self.n
        cols = [self.rays[j] for j in outside]
        cols += [tuple(-x for x in self.rays[k]) for k in inside]
        nvars = len(cols)
        rows = [[c[i] for c in cols] for i in range(self.n)]
        rows.append([1] * len(outside) + [0] * len(inside))
        prob = LPProblem(
            nvars,
            eq_rows=rows,
            eq_rhs=[0] * self.n + [1],
            nonneg=range(len(outside)),
        )
        out = lp_solve(prob)
        if out.status is not Status.INFEASIBLE:
            return None
        u = out.farkas[0][: self.n]
        c = integer_direction([-x for x in u])
        if not any(c):
            c = (0,) * self.n
        return c

    def minimal_face_of_points(self, points: Iterable[Sequence]) -> tuple[RaySet, tuple[int, ...]]:
        """Rays of the smallest face containing ``points`` plus a witness c that
        vanishes on that face and is positive on every other ray."""
        pts = [tuple(Fraction(x) for x in p) for p in points]
        for q in pts:
            if self.member_pos(q) is None:
                raise PointOutsideCone(f"{[str(x) for x in q]} is not in the cone")
        return self._minimal_face(pts, set())

    def minimal_face(self, R: Iterable[int]) -> RaySet:
        R = set(R)
        if not R:
            return frozenset()
        if self.is_face(R):
            return frozenset(R)
        return self._minimal_face([self.rays[j] for j in R], R)[0]

    def _minimal_face(self, pts, inside: set) -> tuple[RaySet, tuple[int, ...]]:
        # Ray r_k lies in the minimal face of p = sum(pts) iff some
        # lam >= 0 with lam_k > 0 has sum lam_j r_j = mu p.  Each round asks
        # for such a lam carrying weight 1 outside the rays found so far (the
        # normalisation replaces "some lam_k > 0"); every feasible round adds at
        # least one ray.  An infeasible round yields, via Farkas, c with
        # c.r >= 0 on the found rays, c.r >= w > 0 on the others and c.p <= 0,
        # which is exactly a face witness for the found set.
        n = self.n
        p = [sum((q[i] for q in pts), Fraction(0)) for i in range(n)]
        inside = set(inside)
        if not any(p):
            return frozenset(), self.face_witness(())
        rays = self.rays
        minus_p = tuple(-x for x in integer_direction(p))
        while True:
            if len(inside) == self.t:
                return frozenset(inside), (0,) * n
            cols = list(rays) + [minus_p]
            rows = [[c[i] for c in cols] for i in range(n)]
            rows.append([0 if k in inside else 1 for k in range(self.t)] + [0])
            prob = LPProblem(len(cols), eq_rows=rows, eq_rhs=[0] * n + [1], nonneg=range(len(cols)))
            out = lp_solve(prob)
            if out.status is Status.INFEASIBLE:
                c = integer_direction([-x for x in out.farkas[0][:n]])
                key = frozenset(inside)
                with self._lock:
                    self._face_cache.setdefault(key, c)
                return key, c
            inside.update(k for k in range(self.t) if out.witness[k] > 0)

    # -- relative interiors ------------------------------------------------

    def relint_intersect(self, R1: Iterable[int], R2: Iterable[int]) -> Optional[RelintWitness]:
        """A nonzero common point of relint pos(R1) and relint pos(R2), or None."""
        A = [self.rays[j] for j in sorted(R1)]
        B = [self.rays[j] for j in sorted(R2)]
        if not A or not B:
            raise ValueError("relative interiors of empty ray sets are not compared")
        # l, k >= 1 written as 1 + l', 1 + k' with l', k' >= 0
        rhs = [sum(b[i] for b in B) - sum(a[i] for a in A) for i in range(self.n)]
        cols = A + [tuple(-x for x in b) for b in B]
        out = lp_solve(_columns_problem(cols, rhs))
        if out.status is Status.INFEASIBLE:
            return None
        w = out.witness
        left = tuple(1 + x for x in w[: len(A)])
        right = tuple(1 + x for x in w[len(A):])
        point = tuple(sum(l * a[i] for l, a in zip(left, A)) for i in range(self.n))
        return RelintWitness(point, left, right)

    def spans_meet(self, R1: Iterable[int], R2: Iterable[int]) -> bool:
        """Cheap necessary condition for relint intersection: span(R1) and span(R2)
        share a nonzero vector."""
        A = [self.rays[j] for j in R1]
        B = [self.rays[j] for j in R2]
        return rank(A) + rank(B) - rank(A + B) > 0


def extreme_rays(A: Union[VectorConfig, Sequence[Sequence[int]]]) -> ConeModel:
    """Extreme rays of pos_Q(A) as primitive vectors, lexicographically ordered."""
    if not isinstance(A, VectorConfig):
        A = VectorConfig(tuple(map(tuple, A)))
    directions: dict[tuple[int, ...], list[int]] = {}
    for i, a in enumerate(A.vectors):
        directions.setdefault(primitive(a), []).append(i)
    cands = sorted(directions)
    rays = []
    for idx, r in enumerate(cands):
        others = cands[:idx] + cands[idx + 1:]
        if in_positive_hull(r, others) is None:
            rays.append(r)
    position = {r: k for k, r in enumerate(rays)}
    ray_of_generator = [position.get(primitive(a)) for a in A.vectors]
    return ConeModel(A, rays, ray_of_generator)
