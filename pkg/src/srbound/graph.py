"""The intersection graph G_sigma on minimal non-faces and its cover bounds."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from ._parallel import pmap
from .cliques import clique_partition_bounds, min_clique_partition
from .cone import ConeModel, RelintWitness
from .errors import ComponentTooLarge
from .matching import lex_least_maximum_matching
from .stanley_reisner import SRGenerator

DEFAULT_CLIQUE_CAP = 25


@dataclass
class SigmaGraph:
    """Vertices are minimal non-faces; i ~ j iff their relative interiors meet.

    Adjacency is stored as neighbour sets (symmetric, no loops); ``witness``
    holds a common relative-interior point for each edge (i < j).
    """

    vertices: list[SRGenerator]
    adjacency: list[set[int]]
    component_id: list[int]
    witness: dict[tuple[int, int], RelintWitness] = field(default_factory=dict)

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((i, j) for i, nb in enumerate(self.adjacency) for j in nb if i < j)

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def components(self) -> list[list[int]]:
        """Vertex lists per component, ordered by least vertex."""
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(self.component_id):
            groups.setdefault(c, []).append(v)
        return [groups[c] for c in sorted(groups)]

    def adjacency_map(self) -> dict[int, set[int]]:
        return dict(enumerate(self.adjacency))


def _union_find_labels(n: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        a, b = find(i), find(j)
        if a != b:
            parent[max(a, b)] = min(a, b)
    roots: dict[int, int] = {}
    return [roots.setdefault(find(v), len(roots)) for v in range(n)]


def build_graph(cone: ConeModel, gens: Sequence[SRGenerator], threads: Optional[int] = 1) -> SigmaGraph:
    """Pairwise relative-interior tests with two exact prefilters.

    A common relative-interior point p has the same minimal face as both
    generators (the minimal face of a set equals that of any point in the
    relative interior of its positive hull), so only pairs with equal
    minimal faces are tested.  Within a bucket, pairs whose linear spans meet
    only in 0 are discarded by a rank test before any LP.
    """
    gens = list(gens)
    faces = pmap(lambda g: cone.minimal_face(g.rays), gens, threads)
    buckets: dict[frozenset, list[int]] = {}
    for i, f in enumerate(faces):
        buckets.setdefault(f, []).append(i)
    pairs = []
    for members in buckets.values():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                pairs.append((members[a], members[b]))
    pairs.sort()

    def test(pair):
        i, j = pair
        R1, R2 = gens[i].rays, gens[j].rays
        if not cone.spans_meet(R1, R2):
            return None
        return cone.relint_intersect(R1, R2)

    results = pmap(test, pairs, threads)
    adjacency: list[set[int]] = [set() for _ in gens]
    witness = {}
    for (i, j), w in zip(pairs, results):
        if w is not None:
            adjacency[i].add(j)
            adjacency[j].add(i)
            witness[(i, j)] = w
    comp = _union_find_labels(len(gens), sorted(witness))
    return SigmaGraph(gens, adjacency, comp, witness)


@dataclass
class BoundsReport:
    b: int
    c: int
    components: int
    height: int
    m: int
    matching: list[tuple[int, int]]
    clique_cover: list[tuple[int, ...]]

    @property
    def mu_lower(self) -> int:
        return max(self.b, self.height)


def bound_b(g: SigmaGraph, threads: Optional[int] = 1) -> tuple[int, list[tuple[int, int]]]:
    """|V| minus a maximum matching, with the lexicographically least matching."""
    adj = g.adjacency_map()
    parts = pmap(lambda comp: lex_least_maximum_matching(comp, adj), g.components(), threads)
    matching = sorted(e for part in parts for e in part)
    return len(g.vertices) - len(matching), matching


def bound_c(
    g: SigmaGraph, cap: int = DEFAULT_CLIQUE_CAP, threads: Optional[int] = 1
) -> tuple[int, list[tuple[int, ...]]]:
    """Exact minimum clique cover, solved per component.

    Raises ComponentTooLarge when some component exceeds ``cap`` vertices;
    the exception carries an interval for c built from exact values on small
    components and cheap bounds on the large ones.
    """
    adj = g.adjacency_map()
    comps = g.components()
    big = [comp for comp in comps if len(comp) > cap]
    if big:
        lower = upper = 0
        for comp in comps:
            if len(comp) > cap:
                lo, hi = clique_partition_bounds(comp, adj)
            else:
                lo = hi = len(min_clique_partition(comp, adj))
            lower += lo
            upper += hi
        raise ComponentTooLarge(cap, max(len(c) for c in big), lower, upper)
    parts = pmap(lambda comp: min_clique_partition(comp, adj), comps, threads)
    cover = sorted(c for part in parts for c in part)
    return len(cover), cover


def to_dot(g: SigmaGraph) -> str:
    lines = ["graph sigma {"]
    for v in g.vertices:
        lines.append(f'  "{v.label()}";')
    for i, j in g.edges():
        lines.append(f'  "{g.vertices[i].label()}" -- "{g.vertices[j].label()}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
