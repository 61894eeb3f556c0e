"""End-to-end analysis of a configuration and its JSON report."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .cone import ConeModel, extreme_rays
from .errors import ComponentTooLarge
from .exact import dot
from .graph import DEFAULT_CLIQUE_CAP, SigmaGraph, bound_b, bound_c, build_graph
from .lattice import VectorConfig
from .stanley_reisner import FaceLattice, SRGenerator, minimal_nonfaces

LOWER_BOUND_NOTE = (
    "b and c are lower bounds computed from the cone alone; they do not assert "
    "that any ideal-theoretic invariant equals them"
)


@dataclass
class Analysis:
    config: VectorConfig
    height: int
    cone: ConeModel
    gens: list[SRGenerator]
    faces: FaceLattice
    graph: SigmaGraph
    b: int
    matching: list[tuple[int, int]]
    c: Optional[int]
    cover: Optional[list[tuple[int, ...]]]
    c_interval: tuple[int, int]
    timing: dict[str, float] = field(default_factory=dict)

    @property
    def mu_lower(self) -> int:
        return max(self.b, self.height)


def analyze(
    config: VectorConfig,
    height: int,
    threads: Optional[int] = 1,
    cap: int = DEFAULT_CLIQUE_CAP,
) -> Analysis:
    timing: dict[str, float] = {}
    clock = time.perf_counter()

    def lap(name):
        nonlocal clock
        now = time.perf_counter()
        timing[name] = round(now - clock, 6)
        clock = now

    cone = extreme_rays(config)
    lap("cone")
    gens, faces = minimal_nonfaces(cone, threads)
    lap("stanley_reisner")
    graph = build_graph(cone, gens, threads)
    lap("graph")
    b, matching = bound_b(graph, threads)
    try:
        c, cover = bound_c(graph, cap, threads)
        interval = (c, c)
    except ComponentTooLarge as exc:
        c, cover = None, None
        interval = (exc.lower, exc.upper)
    lap("bounds")
    return Analysis(config, height, cone, gens, faces, graph, b, matching, c, cover, interval, timing)


def _q(x) -> Any:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def inequalities(an: Analysis) -> list[str]:
    m = an.config.m
    c = str(an.c) if an.c is not None else f"[{an.c_interval[0]},{an.c_interval[1]}]"
    return [
        f"h = {an.height} <= ara(I) <= ara_A(I) <= m = {m}",
        f"c_G = {c} <= ara_A(I)",
        f"b_G = {an.b} <= bar(I)",
        f"max(b_G, h) = {an.mu_lower} <= mu(I)",
    ]


def to_json(
    an: Analysis,
    echo: dict,
    counts_only: bool = False,
    include_faces: bool = False,
    include_timing: bool = False,
) -> dict:
    g = an.graph
    comps = g.components()
    out: dict[str, Any] = {
        "input": echo,
        "height": an.height,
        "ara_upper_hint": an.config.m,
        "strongly_convex": True,
        "simplex_cone": not an.gens,
        "rays": [list(r) for r in an.cone.rays],
        "ray_of_generator": list(an.cone.ray_of_generator),
        "sr_generators": [list(v.rays) for v in an.gens],
        "graph": {
            "vertices": len(g.vertices),
            "edges": g.num_edges,
            "components": len(comps),
            "component_sizes": [len(cc) for cc in comps],
        },
        "bounds": {
            "b": an.b,
            "c": an.c,
            "c_interval": list(an.c_interval),
            "mu_lower": an.mu_lower,
        },
        "inequalities": inequalities(an),
        "note": LOWER_BOUND_NOTE,
    }
    if an.c is None:
        out["bounds"]["c_note"] = "a component exceeded the exact clique-cover cap"
    if not an.gens:
        out["note"] += "; the cone is simplicial, so G_sigma is empty and both bounds vanish"
    if not counts_only:
        out["certificates"] = {
            "edges": [
                {
                    "pair": [i, j],
                    "point": [_q(x) for x in w.point],
                    "left": [_q(x) for x in w.left],
                    "right": [_q(x) for x in w.right],
                }
                for (i, j), w in sorted(g.witness.items())
            ],
            "matching": [list(e) for e in an.matching],
            "clique_cover": [list(cc) for cc in an.cover] if an.cover is not None else None,
        }
    if include_faces:
        dims = an.faces.dimensions(an.cone)
        out["faces"] = [{"rays": list(f), "dim": d} for f, d in zip(an.faces.faces, dims)]
    if include_timing:
        out["timing"] = an.timing
    return out


def verify_report(report: dict) -> list[str]:
    """Re-check the certificates of a report; returns a list of problems."""
    problems: list[str] = []
    rays = [tuple(r) for r in report["rays"]]
    gens = [tuple(v) for v in report["sr_generators"]]
    V = len(gens)
    if report["graph"]["vertices"] != V:
        problems.append("vertex count differs from the generator list")
    certs = report.get("certificates")
    if certs is None:
        return problems
    adj: dict[int, set[int]] = {v: set() for v in range(V)}
    for e in certs["edges"]:
        i, j = e["pair"]
        left = [Fraction(x) for x in e["left"]]
        right = [Fraction(x) for x in e["right"]]
        point = [Fraction(x) for x in e["point"]]
        if any(x <= 0 for x in left + right):
            problems.append(f"edge {i}-{j}: coefficients must be positive")
        if len(left) != len(gens[i]) or len(right) != len(gens[j]):
            problems.append(f"edge {i}-{j}: coefficient count mismatch")
            continue
        n = len(point)
        lp = [dot(left, [rays[r][k] for r in gens[i]]) for k in range(n)]
        rp = [dot(right, [rays[r][k] for r in gens[j]]) for k in range(n)]
        if lp != point or rp != point or not any(point):
            problems.append(f"edge {i}-{j}: witness point does not check out")
        adj[i].add(j)
        adj[j].add(i)
    if len(certs["edges"]) != report["graph"]["edges"]:
        problems.append("edge count differs from the edge certificates")
    seen: set[int] = set()
    for i, j in certs["matching"]:
        if j not in adj[i]:
            problems.append(f"matching pair {i}-{j} is not an edge")
        if i in seen or j in seen:
            problems.append(f"matching pair {i}-{j} reuses a vertex")
        seen.update((i, j))
    if report["bounds"]["b"] != V - len(certs["matching"]):
        problems.append("b differs from |V| - |matching|")
    cover = certs.get("clique_cover")
    if cover is not None:
        covered: list[int] = [v for cc in cover for v in cc]
        if sorted(covered) != list(range(V)):
            problems.append("clique cover is not a partition of the vertices")
        for cc in cover:
            if any(b not in adj[a] for a in cc for b in cc if a < b):
                problems.append(f"cover class {cc} is not a clique")
        if report["bounds"]["c"] != len(cover):
            problems.append("c differs from the clique cover size")
        if report["bounds"]["c"] > report["bounds"]["b"]:
            problems.append("c exceeds b")
    return problems
