"""Buchberger completion and ideal membership over Q.

Degree-lexicographic order with x_0 > x_1 > ...; S-pairs are processed by
the normal strategy (least lcm first) with the coprime and chain criteria.
When the target and all generators are homogeneous in the standard grading
the completion is truncated at the target's degree, which decides membership
exactly.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .errors import ResourceLimit
from .poly import Mono, Poly, deglex_key

Terms = dict  # Mono -> Fraction

DEFAULT_MAX_BASIS = 2000
DEFAULT_MAX_DEGREE = 60


def _lead(p: Terms) -> Mono:
    return max(p, key=deglex_key)


def _divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(p: Terms) -> Terms:
    c = p[_lead(p)]
    return {m: v / c for m, v in p.items()}


def _sub_scaled(p: Terms, q: Terms, coef: Fraction, shift: Mono) -> None:
    """p -= coef * x^shift * q, in place."""
    for m, v in q.items():
        mm = tuple(a + b for a, b in zip(m, shift))
        nv = p.get(mm, Fraction(0)) - coef * v
        if nv:
            p[mm] = nv
        else:
            p.pop(mm, None)


def reduce(f: Terms, basis: Sequence[Terms], leads: Sequence[Mono]) -> Terms:
    """Full remainder of f on division by a list of monic polynomials."""
    p = dict(f)
    rem: Terms = {}
    while p:
        lm = _lead(p)
        lc = p[lm]
        for g, gl in zip(basis, leads):
            if _divides(gl, lm):
                _sub_scaled(p, g, lc, tuple(a - b for a, b in zip(lm, gl)))
                break
        else:
            rem[lm] = lc
            del p[lm]
    return rem


def groebner_basis(
    gens: Sequence[Poly],
    max_basis: int = DEFAULT_MAX_BASIS,
    max_degree: int = DEFAULT_MAX_DEGREE,
    truncate: Optional[int] = None,
) -> list[Poly]:
    """A Groebner basis (not reduced) of the ideal generated by ``gens``.

    With ``truncate`` set, pairs whose lcm has degree above it are skipped;
    the result is then a basis only up to that degree (valid for
    homogeneous input).
    """
    if not gens:
        return []
    nvars = gens[0].nvars
    basis: list[Terms] = []
    leads: list[Mono] = []
    for g in gens:
        if not g.is_zero():
            t = _monic(g.terms)
            basis.append(t)
            leads.append(_lead(t))
    pending: set[tuple[int, int]] = {(i, j) for j in range(len(basis)) for i in range(j)}

    def pair_key(pr):
        i, j = pr
        return (deglex_key(_lcm(leads[i], leads[j])), pr)

    while pending:
        pr = min(pending, key=pair_key)
        pending.discard(pr)
        i, j = pr
        L = _lcm(leads[i], leads[j])
        if truncate is not None and sum(L) > truncate:
            continue
        if all(a == 0 or b == 0 for a, b in zip(leads[i], leads[j])):
            continue
        if any(
            k != i and k != j
            and _divides(leads[k], L)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(basis))
        ):
            continue
        s: Terms = {}
        _sub_scaled(s, basis[i], Fraction(-1), tuple(a - b for a, b in zip(L, leads[i])))
        _sub_scaled(s, basis[j], Fraction(1), tuple(a - b for a, b in zip(L, leads[j])))
        r = reduce(s, basis, leads)
        if not r:
            continue
        r = _monic(r)
        lr = _lead(r)
        if sum(lr) > max_degree:
            raise ResourceLimit(f"basis element of degree {sum(lr)} exceeds the cap {max_degree}")
        k = len(basis)
        basis.append(r)
        leads.append(lr)
        if len(basis) > max_basis:
            raise ResourceLimit(f"Groebner basis exceeds {max_basis} elements")
        pending.update((a, k) for a in range(k))
    return [Poly(nvars, b) for b in basis]


def groebner_member(
    f: Poly,
    gens: Sequence[Poly],
    max_basis: int = DEFAULT_MAX_BASIS,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> bool:
    """Whether f lies in the ideal generated by ``gens``."""
    if f.is_zero():
        return True
    if any(g.nvars != f.nvars for g in gens):
        raise ValueError("polynomials live in rings with different variable counts")
    homogeneous = f.is_standard_homogeneous() and all(g.is_standard_homogeneous() for g in gens)
    truncate = f.total_degree() if homogeneous else None
    G = groebner_basis(gens, max_basis, max_degree, truncate)
    basis = [g.terms for g in G]
    leads = [_lead(t) for t in basis]
    return not reduce(f.terms, basis, leads)
