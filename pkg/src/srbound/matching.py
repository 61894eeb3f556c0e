"""Maximum-cardinality matching in general graphs (Edmonds' blossom contraction)."""
from __future__ import annotations

from collections import deque
from typing import Mapping, Sequence


def maximum_matching(n: int, adj: Sequence[Sequence[int]]) -> list[int]:
    """Return ``mate`` with mate[v] the partner of v, or -1 when unmatched.

    Vertices are 0..n-1 and ``adj[v]`` lists neighbours of v.  Runs one
    alternating-tree search per vertex, contracting odd cycles on the fly.
    """
    mate = [-1] * n

    def find_augmenting(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]):
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to, parent
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1, parent

    for root in range(n):
        if mate[root] != -1:
            continue
        end, parent = find_augmenting(root)
        while end != -1:
            pv = parent[end]
            nxt = mate[pv]
            mate[end] = pv
            mate[pv] = end
            end = nxt
    return mate


def matching_size(mate: Sequence[int]) -> int:
    return sum(1 for v, w in enumerate(mate) if w > v)


def _nu(vertices: Sequence[int], adj: Mapping[int, set]) -> int:
    local = {v: k for k, v in enumerate(vertices)}
    ladj = [[local[w] for w in sorted(adj[v]) if w in local] for v in vertices]
    return matching_size(maximum_matching(len(vertices), ladj))


def lex_least_maximum_matching(vertices: Sequence[int], adj: Mapping[int, set]) -> list[tuple[int, int]]:
    """Lexicographically least maximum matching (edges as sorted pairs, in
    increasing order), by self-reduction: scan edges in order and keep an edge
    whenever the rest of the graph can still complete a maximum matching."""
    remaining = sorted(vertices)
    need = _nu(remaining, adj)
    chosen: list[tuple[int, int]] = []
    alive = set(remaining)
    edges = sorted((u, w) for u in remaining for w in adj[u] if u < w and w in alive)
    for u, w in edges:
        if need == 0:
            break
        if u not in alive or w not in alive:
            continue
        rest = [x for x in remaining if x in alive and x != u and x != w]
        if _nu(rest, adj) == need - 1:
            chosen.append((u, w))
            alive.discard(u)
            alive.discard(w)
            need -= 1
    assert need == 0
    return chosen
