"""Minimal non-faces of a cone: the minimal generators of its Stanley-Reisner ideal."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional

from ._parallel import pmap
from .cone import ConeModel
from .exact import rank


@dataclass(frozen=True, order=True)
class SRGenerator:
    """Square-free monomial Y_{i1}...Y_{il}, stored as its sorted ray indices."""

    rays: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(sorted(self.rays)))

    def __len__(self):
        return len(self.rays)

    def label(self) -> str:
        return "M:" + ",".join(map(str, self.rays))


@dataclass
class FaceLattice:
    """Faces met during enumeration (ray-index tuples), always containing the
    empty face and every single ray."""

    faces: list[tuple[int, ...]] = field(default_factory=list)

    def dimensions(self, cone: ConeModel) -> list[int]:
        return [rank([cone.rays[j] for j in f]) if f else 0 for f in self.faces]

    def __contains__(self, R) -> bool:
        return tuple(sorted(R)) in set(self.faces)


def _candidates(faces: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    # join faces sharing all but their last ray; keep sets whose every
    # facet-subset is a face
    known = set(faces)
    out = []
    by_prefix: dict[tuple[int, ...], list[int]] = {}
    for f in faces:
        by_prefix.setdefault(f[:-1], []).append(f[-1])
    for prefix, lasts in by_prefix.items():
        lasts.sort()
        for a in range(len(lasts)):
            for b in range(a + 1, len(lasts)):
                cand = prefix + (lasts[a], lasts[b])
                if all(cand[:i] + cand[i + 1:] in known for i in range(len(cand) - 2)):
                    out.append(cand)
    out.sort()
    return out


def minimal_nonfaces(
    cone: ConeModel, threads: Optional[int] = 1
) -> tuple[list[SRGenerator], FaceLattice]:
    """Breadth-first search by cardinality.

    A k-set is tested only when all of its (k-1)-subsets are faces; a failing
    candidate is a minimal non-face and is never extended.  Minimal non-faces
    are linearly independent, so sizes beyond dim + 1 never need testing.
    """
    t = cone.t
    lattice = FaceLattice([()] + [(j,) for j in range(t)])
    gens: list[SRGenerator] = []
    level = [(j,) for j in range(t)]
    cap = cone.dim + 1
    k = 2
    while level and k <= cap:
        cands = _candidates(level)
        verdicts = pmap(cone.is_face, cands, threads)
        level = []
        for cand, ok in zip(cands, verdicts):
            if ok:
                level.append(cand)
                lattice.faces.append(cand)
            else:
                gens.append(SRGenerator(cand))
        k += 1
    for g in gens:
        assert rank([cone.rays[j] for j in g.rays]) == len(g), f"{g} is not a simplex cone"
    gens.sort()
    return gens, lattice


def sr_generator_count_formula_An(n: int) -> int:
    """Number of minimal non-faces of pos(A_n): 9 C(n,3) + 12 C(n,4)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return 9 * comb(n, 3) + 12 * comb(n, 4)
