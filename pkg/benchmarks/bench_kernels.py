"""Compare the numba kernels with their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--end-to-end]

Kernel timings are taken in-process (both variants are importable). With
``--end-to-end`` a small suite run is also timed in two subprocesses, one
with ``SEMIEXP_DISABLE_NUMBA=1``.
"""
import argparse
import os
import subprocess
import sys
import time
from itertools import product

import numpy as np

from semiexp import kernels
from semiexp._jit import HAVE_NUMBA
from semiexp.corpus import sample_transformation_semigroups
from semiexp.cayley import TwoSidedCayleyGraph


def best_of(fn, repeat):
    fn()  # warm-up, includes jit compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads():
    tables3 = np.array(list(product(range(3), repeat=9)), dtype=np.int64).reshape(-1, 3, 3)
    big = max(sample_transformation_semigroups(4, 3, 30, 7), key=lambda e: e.semigroup.n)
    S = big.semigroup
    gs = big.generated
    E = S.ext
    gens = np.asarray(gs.gens, dtype=np.int64)
    src, lab, dst = kernels.cayley_edges_np(E, gens)
    nv = (S.n + 1) ** 2
    G = TwoSidedCayleyGraph(gs)
    rng = np.random.default_rng(0)
    words = [rng.integers(0, len(gens), 40) for _ in range(200)]
    tag = f"order {S.n}, {len(gens)} generators, {len(src)} Cayley edges"
    return tag, [
        ("batch associativity, all 3x3 tables", "batch_associative", (tables3,)),
        ("associativity witness", "assoc_witness", (S.table,)),
        ("power tables", "power_tables", (S.table,)),
        ("two-sided Cayley edges", "cayley_edges", (E, gens)),
        ("strongly connected components", "scc_labels", (nv, src, dst)),
        ("KR markers, 200 words of length 40", "markers_many",
         (E, gens, words, G.keys, G.transition, G.scc)),
        ("strong equidivisibility search", "equidiv_witness", (E, S.n, 1)),
    ]


def call(name, variant, args):
    if name == "markers_many":
        E, gens, words, keys, tr, scc = args
        fn = getattr(kernels, "markers_" + variant)
        return lambda: [fn(E, gens, w, keys, tr, scc, kernels.KR) for w in words]
    fn = getattr(kernels, f"{name}_{variant}")
    return lambda: fn(*args)


def end_to_end():
    code = ("import time; from semiexp.harness import run_suite; "
            "from semiexp.corpus import default_catalog; "
            "cat = default_catalog(max_order=2, samples=20); t = time.perf_counter(); "
            "run_suite('tower', cat); print(time.perf_counter() - t)")
    out = {}
    for label, flag in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, SEMIEXP_DISABLE_NUMBA=flag)
        r = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                           check=True)
        out[label] = float(r.stdout.strip().splitlines()[-1])
    return out


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--end-to-end", action="store_true")
    args = ap.parse_args(argv)
    if not HAVE_NUMBA:
        print("numba unavailable or disabled; only the numpy column is meaningful")
    tag, loads = workloads()
    print(f"workload: {tag}")
    print(f"{'kernel':40s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}")
    for title, name, a in loads:
        nb = best_of(call(name, "nb", a), args.repeat) * 1e3
        npy = best_of(call(name, "np", a), args.repeat) * 1e3
        print(f"{title:40s} {nb:10.3f} {npy:10.3f} {npy / nb:8.1f}x")
    if args.end_to_end:
        t = end_to_end()
        print(f"tower suite, 29 entries: numba {t['numba']:.2f}s, numpy {t['numpy']:.2f}s")


if __name__ == "__main__":
    main()
