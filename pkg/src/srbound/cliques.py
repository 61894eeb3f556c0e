"""Exact minimum clique partitions of small graphs.

Graphs are given as a vertex list and an adjacency mapping; internally each
vertex set is a bitmask over the local vertex order.
"""
from __future__ import annotations

from typing import Iterator, Mapping, Sequence


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Local:
    def __init__(self, vertices: Sequence[int], adj: Mapping[int, set]):
        self.vertices = sorted(vertices)
        index = {v: k for k, v in enumerate(self.vertices)}
        self.nbr = [0] * len(self.vertices)
        for v in self.vertices:
            for w in adj[v]:
                if w in index and w != v:
                    self.nbr[index[v]] |= 1 << index[w]
        self.full = (1 << len(self.vertices)) - 1

    def greedy_cover(self, mask: int) -> list[int]:
        out = []
        while mask:
            v = (mask & -mask).bit_length() - 1
            clique = 1 << v
            cand = self.nbr[v] & mask
            while cand:
                w = (cand & -cand).bit_length() - 1
                clique |= 1 << w
                cand &= self.nbr[w]
            out.append(clique)
            mask &= ~clique
        return out

    def independent_lower(self, mask: int) -> int:
        # pairwise non-adjacent vertices need distinct cliques
        count = 0
        while mask:
            v = (mask & -mask).bit_length() - 1
            count += 1
            mask &= ~((1 << v) | self.nbr[v])
        return count

    def maximal_cliques_with(self, v: int, mask: int) -> list[int]:
        """Maximal cliques of the subgraph on ``mask`` that contain v."""
        out: list[int] = []

        def bk(r: int, p: int, x: int):
            if not p and not x:
                out.append(r)
                return
            pivot_src = p | x
            u = max(_bits(pivot_src), key=lambda k: bin(self.nbr[k] & p).count("1"))
            for w in _bits(p & ~self.nbr[u]):
                bk(r | (1 << w), p & self.nbr[w], x & self.nbr[w])
                p &= ~(1 << w)
                x |= 1 << w

        bk(1 << v, self.nbr[v] & mask, 0)
        return out

    def cliques_with(self, v: int, mask: int) -> list[int]:
        """All cliques inside ``mask`` containing v (v must be its lowest member)."""
        out: list[int] = []
        cand0 = self.nbr[v] & mask & ~((1 << (v + 1)) - 1)

        def grow(clique: int, cand: int):
            out.append(clique)
            for w in _bits(cand):
                grow(clique | (1 << w), cand & self.nbr[w] & ~((1 << (w + 1)) - 1))

        grow(1 << v, cand0)
        return out

    def min_size(self) -> int:
        best = [len(self.greedy_cover(self.full))]

        def rec(mask: int, used: int):
            if not mask:
                best[0] = min(best[0], used)
                return
            if used + self.independent_lower(mask) >= best[0]:
                return
            v = (mask & -mask).bit_length() - 1
            # some optimal partition extends the class of v to a maximal clique
            # of the remaining graph; shrinking other classes keeps it valid
            for clique in self.maximal_cliques_with(v, mask):
                rec(mask & ~clique, used + 1)

        rec(self.full, 0)
        return best[0]

    def lex_least(self, k: int) -> list[int]:
        """Lexicographically least partition into exactly k cliques, each class
        listed by sorted vertices, classes ordered by their least vertex."""

        def rec(mask: int, left: int):
            if not mask:
                return [] if left == 0 else None
            if left == 0 or self.independent_lower(mask) > left:
                return None
            v = (mask & -mask).bit_length() - 1
            cands = self.cliques_with(v, mask)
            cands.sort(key=lambda c: list(_bits(c)))
            for c in cands:
                rest = rec(mask & ~c, left - 1)
                if rest is not None:
                    return [c] + rest
            return None

        out = rec(self.full, k)
        assert out is not None
        return out

    def to_sets(self, masks: list[int]) -> list[tuple[int, ...]]:
        return [tuple(self.vertices[k] for k in _bits(c)) for c in masks]


def min_clique_partition(vertices: Sequence[int], adj: Mapping[int, set]) -> list[tuple[int, ...]]:
    """A minimum partition of the vertices into cliques (lexicographically least)."""
    if not vertices:
        return []
    loc = _Local(vertices, adj)
    return loc.to_sets(loc.lex_least(loc.min_size()))


def clique_partition_bounds(vertices: Sequence[int], adj: Mapping[int, set]) -> tuple[int, int]:
    """Cheap (lower, upper) bounds on the clique partition number."""
    if not vertices:
        return 0, 0
    loc = _Local(vertices, adj)
    return max(1, loc.independent_lower(loc.full)), len(loc.greedy_cover(loc.full))
