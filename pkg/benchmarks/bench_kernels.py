"""Compare the compiled kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--nmin 10] [--nmax 18] [--repeat 3]

Times each kernel (subset images, BFS over the power automaton, Moore
refinement) and the end-to-end state complexity on Cerny and random binary
automata, and checks that both backends return identical arrays.
"""

import argparse
import random
import time

import numpy as np

from syncro import kernels
from syncro.core import from_letter_images
from syncro.families import cerny
from syncro.powerset import build_power, successor_table, syn_state_complexity


def best_of(repeat, fn, *args):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def random_binary(n, seed):
    rng = random.Random(seed)
    return from_letter_images([[rng.randrange(n) for _ in range(n)] for _ in range(2)])


def bench(A, label, repeat, backends):
    succ = successor_table(A)
    start = A.full_mask
    init = np.array([bin(i).count("1") == 1 for i in range(1 << A.n)], dtype=np.int64)
    column = np.asarray([row[0] for row in A.delta], dtype=np.int64)
    rows = {}
    results = {}
    for name in backends:
        impl = kernels.get_backend(name)
        t_img, img = best_of(repeat, impl.subset_images, column, A.n)
        t_bfs, bfs = best_of(repeat, impl.bfs, succ, start)
        t_ref, ref = best_of(repeat, impl.refine, succ, init)
        previous = kernels.set_backend(name)
        try:
            t_sc, sc = best_of(repeat, lambda: syn_state_complexity(A, power=build_power(A)))
        finally:
            kernels.set_backend(previous)
        rows[name] = (t_img, t_bfs, t_ref, t_sc)
        results[name] = (img, bfs, ref, sc)
    if len(backends) == 2:
        a, b = results.values()
        same = np.array_equal(a[0], b[0]) and all(np.array_equal(x, y) for x, y in zip(a[1], b[1])) \
            and np.array_equal(a[2], b[2]) and a[3] == b[3]
    else:
        same = True
    for name, (t_img, t_bfs, t_ref, t_sc) in rows.items():
        print(f"{label:<14} {name:<9} {t_img * 1e3:9.2f} {t_bfs * 1e3:9.2f} {t_ref * 1e3:9.2f} {t_sc * 1e3:9.2f}")
    if len(rows) == 2:
        c, p = rows["compiled"], rows["python"]
        speed = "  ".join(f"{pp / cc:6.1f}x" for cc, pp in zip(c, p))
        print(f"{'':<14} {'speedup':<9} {speed}   identical={same}")
    return same


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nmin", type=int, default=10)
    parser.add_argument("--nmax", type=int, default=18)
    parser.add_argument("--step", type=int, default=2)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["compiled", "python"] if kernels.compiled_available() else ["python"]
    if len(backends) == 1:
        print("compiled extension not available; timing the numpy fallback only")
    print(f"{'automaton':<14} {'backend':<9} {'images ms':>9} {'bfs ms':>9} {'refine ms':>9} {'sc ms':>9}")
    ok = True
    for n in range(args.nmin, args.nmax + 1, args.step):
        ok &= bench(cerny(n), f"cerny n={n}", args.repeat, backends)
        ok &= bench(random_binary(n, n), f"random n={n}", args.repeat, backends)
    if not ok:
        raise SystemExit("backends disagree")


if __name__ == "__main__":
    main()
