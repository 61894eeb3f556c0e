"""Compare the compiled and pure-Python simplex kernels.

Runs a batch of random feasibility LPs and the A_n pipeline once per
backend, checks that both backends agree exactly, and prints wall times.

    python3 benchmarks/bench_kernel.py [--n 3 4 5] [--lps 300]
"""
import argparse
import random
import time

from srbound.cone import extreme_rays
from srbound.family import an_config
from srbound.graph import bound_b, bound_c, build_graph
from srbound.kernel import HAVE_COMPILED, set_backend
from srbound.lp import LPProblem, lp_solve
from srbound.stanley_reisner import minimal_nonfaces


def random_lps(count, seed=1):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        nv = rng.randint(4, 12)
        ne = rng.randint(1, nv - 1)
        rows = [[rng.randint(-5, 5) for _ in range(nv)] for _ in range(ne)]
        rhs = [rng.randint(-5, 5) for _ in range(ne)]
        out.append(LPProblem(nv, eq_rows=rows, eq_rhs=rhs, nonneg=range(nv)))
    return out


def run_lps(problems):
    return [(r.status, r.witness, r.farkas) for r in map(lp_solve, problems)]


def run_pipeline(n):
    cone = extreme_rays(an_config(n))
    gens, _ = minimal_nonfaces(cone)
    g = build_graph(cone, gens)
    return len(gens), g.num_edges, bound_b(g)[0], bound_c(g)[0]


def clock(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - start, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="*", default=[3, 4, 5])
    ap.add_argument("--lps", type=int, default=300)
    args = ap.parse_args()
    backends = ["python"] + (["compiled"] if HAVE_COMPILED else [])
    if not HAVE_COMPILED:
        print("compiled kernel not built; timing the Python kernel only")
    problems = random_lps(args.lps)
    tasks = [(f"{args.lps} random LPs", run_lps, problems)]
    tasks += [(f"A_{n} pipeline", run_pipeline, n) for n in args.n]
    print(f"{'task':<20}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for label, fn, arg in tasks:
        times, results = [], []
        for b in backends:
            set_backend(b)
            t, r = clock(fn, arg)
            times.append(t)
            results.append(r)
        assert all(r == results[0] for r in results), f"backends disagree on {label}"
        line = f"{label:<20}" + "".join(f"{t:>11.2f}s" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:>11.1f}x"
        print(line)
    set_backend(backends[-1])


if __name__ == "__main__":
    main()
