"""Command-line interface: ``srbound analyze | check-cover | verify-an``.

Exit codes: 0 success, 1 usage, 2 invalid input, 3 negative cover verdict
(or a failed claim in verify-an).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidInput, NotPositive, NotStronglyConvex, SRBoundError
from .family import AnSpec, InvalidN, an_config, verify_an
from .graph import DEFAULT_CLIQUE_CAP, to_dot
from .lattice import Lattice, VectorConfig, config_height, height, quotient_config
from .poly import Poly, check_cover, parse_an_poly
from .report import analyze, to_json

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_NEGATIVE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class LoadedInput:
    config: VectorConfig
    height: int
    echo: dict
    an: Optional[AnSpec] = None


def _int_matrix(rows, what: str) -> list[list[int]]:
    if not isinstance(rows, list) or not rows:
        raise InvalidInput(f"{what} must be a nonempty list of integer rows")
    out = []
    for r in rows:
        if not isinstance(r, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in r):
            raise InvalidInput(f"{what} rows must be lists of integers, got {r!r}")
        out.append(r)
    return out


def _check_character(doc: dict) -> None:
    ch = doc.get("character")
    if ch is None or ch == "trivial":
        return
    if isinstance(ch, list) and all(str(x) == "1" for x in ch):
        return
    raise InvalidInput(
        "only the trivial character is supported; the bounds do not depend on it, "
        "so drop the 'character' key"
    )


def load_input(doc) -> LoadedInput:
    if not isinstance(doc, dict):
        raise InvalidInput("input must be a JSON object")
    _check_character(doc)
    keys = [k for k in ("lattice_basis", "vector_config", "family") if k in doc]
    if len(keys) != 1:
        raise InvalidInput("input needs exactly one of 'lattice_basis', 'vector_config', 'family'")
    kind = keys[0]
    if kind == "lattice_basis":
        L = Lattice(tuple(map(tuple, _int_matrix(doc[kind], kind))))
        A = quotient_config(L)
        echo = {"kind": kind, "m": L.m, "n": A.n, "rank": L.rank}
        return LoadedInput(A, height(L), echo)
    if kind == "vector_config":
        A = VectorConfig(tuple(map(tuple, _int_matrix(doc[kind], kind))))
        return LoadedInput(A, config_height(A), {"kind": kind, "m": A.m, "n": A.n})
    fam = doc[kind]
    if not isinstance(fam, dict) or fam.get("kind") != "An":
        raise InvalidInput('family must be {"kind": "An", "n": N}')
    n = fam.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidInput("family n must be an integer")
    spec = AnSpec(n)
    A = an_config(n)
    echo = {"kind": "family", "family": {"kind": "An", "n": n}, "m": A.m, "n": A.n}
    return LoadedInput(A, config_height(A), echo, spec)


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc}") from exc


def load_polys(doc, loaded: LoadedInput) -> list[Poly]:
    if not isinstance(doc, dict) or "polys" not in doc or "variables" not in doc:
        raise InvalidInput("polynomial file needs keys 'variables' and 'polys'")
    m = doc["variables"]
    if m != loaded.config.m:
        raise InvalidInput(f"polynomials use {m} variables but the configuration has {loaded.config.m}")
    if not isinstance(doc["polys"], list):
        raise InvalidInput("'polys' must be a list")
    out = []
    for k, p in enumerate(doc["polys"]):
        if isinstance(p, str):
            if loaded.an is None:
                raise InvalidInput("textual polynomials are only accepted for An inputs")
            out.append(parse_an_poly(p, loaded.an.n))
        elif isinstance(p, list):
            out.append(Poly.from_json(m, p))
        else:
            raise InvalidInput(f"polynomial {k} must be a term list or a string")
    return out


def _write(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _threads(k: Optional[int]) -> int:
    return k if k else (os.cpu_count() or 1)


def _report_invalid(exc: InvalidInput) -> int:
    print(f"invalid input: {exc}", file=sys.stderr)
    if isinstance(exc, (NotPositive, NotStronglyConvex)):
        print(f"witness: {json.dumps(list(exc.witness))}", file=sys.stderr)
    return EXIT_INPUT


def cmd_analyze(args) -> int:
    loaded = load_input(_read_json(args.input))
    an = analyze(loaded.config, loaded.height, _threads(args.threads), args.max_clique_vertices)
    report = to_json(an, loaded.echo, args.counts_only, args.faces, args.timing)
    if args.dot:
        _write(args.dot, to_dot(an.graph))
    if args.out:
        _write(args.out, _dump(report))
        g = report["graph"]
        bounds = report["bounds"]
        print(f"rays {len(report['rays'])}, SR generators {g['vertices']}, edges {g['edges']}, "
              f"components {g['components']}")
        for line in report["inequalities"]:
            print(line)
        if not an.gens:
            print("the cone is simplicial: G_sigma is empty")
        if bounds["c"] is None:
            print(f"c not computed exactly; it lies in {bounds['c_interval']}")
    else:
        _write(None, _dump(report))
    return EXIT_OK


def cmd_check_cover(args) -> int:
    loaded = load_input(_read_json(args.input))
    polys = load_polys(_read_json(args.polys), loaded)
    an = analyze(loaded.config, loaded.height, _threads(args.threads), args.max_clique_vertices)
    cov = check_cover(polys, an.cone, an.graph, _threads(args.threads))
    doc = {
        "input": loaded.echo,
        "polys": len(polys),
        "per_poly": [
            {
                "index": pc.index,
                "vertices": list(pc.vertices),
                "complete": pc.complete,
                "a_homogeneous": pc.a_homogeneous,
            }
            for pc in cov.per_poly
        ],
        "union_vertices": list(cov.union_vertices),
        "spanning": cov.spanning,
        "uncovered": [list(v.rays) for v in cov.uncovered],
        "diagnostics": cov.diagnostics,
        "note": "membership of the polynomials in the ideal is not checked; "
        "a non-spanning verdict certifies that they cannot define it up to radical",
    }
    if args.out:
        _write(args.out, _dump(doc))
    for d in cov.diagnostics:
        print(d, file=sys.stderr)
    if cov.spanning:
        print(f"spanning: all {len(an.gens)} vertices of G_sigma are covered")
        return EXIT_OK
    print(f"not spanning: {len(cov.uncovered)} vertices uncovered")
    for v in cov.uncovered:
        print(f"  {v.label()}")
    return EXIT_NEGATIVE


def cmd_verify_an(args) -> int:
    if args.n < 3:
        raise InvalidN(f"verify-an needs n >= 3, got {args.n}")
    rep = verify_an(
        args.n,
        counts_only=args.counts_only,
        groebner=args.groebner,
        faces=args.faces,
        cap=args.max_clique_vertices,
        threads=_threads(args.threads),
    )
    print(rep.table())
    if args.timing:
        for k, v in rep.timing.items():
            print(f"time {k}: {v:.3f}s")
    if args.out:
        doc = {
            "n": rep.n,
            "claims": [
                {"claim": c.name, "expected": c.expected, "computed": c.computed, "pass": c.passed}
                for c in rep.claims
            ],
            "passed": rep.passed,
        }
        if args.timing:
            doc["timing"] = rep.timing
        _write(args.out, _dump(doc))
    return EXIT_OK if rep.passed else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="srbound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p):
        p.add_argument("--threads", type=int, default=None, help="worker threads (default: all CPUs)")
        p.add_argument("--max-clique-vertices", type=int, default=DEFAULT_CLIQUE_CAP,
                       help="largest component solved exactly for c (default 25)")
        p.add_argument("--out", help="write the JSON report here")

    p = sub.add_parser("analyze", help="cone, SR generators, G_sigma and bounds")
    p.add_argument("input")
    common(p)
    p.add_argument("--dot", help="write G_sigma in DOT format here")
    p.add_argument("--faces", action="store_true", help="include the touched face lattice")
    p.add_argument("--counts-only", action="store_true", help="omit certificates")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check-cover", help="spanning test for a candidate polynomial set")
    p.add_argument("input")
    p.add_argument("polys")
    common(p)
    p.set_defaults(func=cmd_check_cover)

    p = sub.add_parser("verify-an", help="check every count for A_n against closed forms")
    p.add_argument("n", type=int)
    common(p)
    p.add_argument("--counts-only", action="store_true", help="skip the generating-set checks")
    p.add_argument("--groebner", action="store_true", help="check the fifth-power membership")
    p.add_argument("--faces", action="store_true", help="check face shapes")
    p.add_argument("--timing", action="store_true", help="print stage timings")
    p.set_defaults(func=cmd_verify_an)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if args.max_clique_vertices < 1 or (args.threads is not None and args.threads < 1):
        parser.error("--max-clique-vertices and --threads must be positive")
    try:
        return args.func(args)
    except InvalidInput as exc:
        return _report_invalid(exc)
    except SRBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
