"""Compiled vs pure-Python coefficient-table kernel.

    python3 benchmarks/bench_kernels.py [--sizes 100 200] [--m 6 8] [--repeat 3]

For each host (random 3-regular, fixed seed) and subset bound m, times the
two kernel phases (prepare, fill_table) for both implementations on the
independence weights and checks the tables are identical.
"""

import argparse
import random
import sys
import time

from indcount import kernels
from indcount.graph import random_regular_graph
from indcount.subgraph_enum import enumerate_connected_subsets


def best_of(repeat, fn):
    best, value = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def bench(kernel, T, G, weights, m, repeat):
    t_prep, local = best_of(repeat, lambda: kernel.prepare(T.subsets, T.ids, G.adjacency))
    t_fill, rows = best_of(repeat, lambda: kernel.fill_table(local, weights, m))
    return t_prep, t_fill, rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 250])
    ap.add_argument("--m", type=int, nargs="+", default=[6, 8])
    ap.add_argument("--repeat", type=int, default=1)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    compiled = kernels.compiled_kernel()
    if compiled is None:
        print("compiled kernel not built; only the Python kernel is available", file=sys.stderr)
        return 1
    py = kernels.python_kernel
    print(f"{'n':>6} {'m':>3} {'subsets':>9} {'py prep':>9} {'py fill':>9} {'cy prep':>9} {'cy fill':>9} {'speedup':>8}")
    for n in args.sizes:
        G = random_regular_graph(3, n, random.Random(args.seed))
        for m in args.m:
            T = enumerate_connected_subsets(G, m)
            weights = [1 if len(S) == 1 else 0 for S in T.subsets]
            pp, pf, a = bench(py, T, G, weights, m, args.repeat)
            cp, cf, b = bench(compiled, T, G, weights, m, args.repeat)
            if a != b:
                print(f"tables differ for n={n}, m={m}", file=sys.stderr)
                return 2
            print(f"{n:>6} {m:>3} {len(T):>9} {pp:>9.3f} {pf:>9.3f} {cp:>9.3f} {cf:>9.3f} "
                  f"{(pp + pf) / (cp + cf):>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
