"""Test semigroups: exhaustive tiny orders, sampled transformation semigroups, fixtures."""
from itertools import product

import numpy as np

from . import kernels
from .errors import OrderTooLarge
from .generated import GeneratedSemigroup
from .io import Entry
from .semigroup import FiniteSemigroup, from_transformations

MAX_ENUM_ORDER = 3

DEFAULT_SAMPLE = dict(degree=3, gens=2, count=100, seed=20241016)


def enumerate_order_n(n):
    """All labeled associative n x n tables, in lexicographic order."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > MAX_ENUM_ORDER:
        raise OrderTooLarge(f"exhaustive enumeration is capped at order {MAX_ENUM_ORDER}")
    tables = np.array(list(product(range(n), repeat=n * n)), dtype=np.int64).reshape(-1, n, n)
    for T in tables[kernels.batch_associative(tables)]:
        yield FiniteSemigroup(T, check="none")


def sample_transformation_semigroups(degree, gens, count, seed):
    """Closures of random generator tuples, deduplicated by table."""
    if degree < 1 or gens < 1 or count < 1:
        raise ValueError("degree, gens and count must be positive")
    rng = np.random.default_rng(seed)
    seen = set()
    out = []
    attempts = 0
    while len(out) < count and attempts < 50 * count:
        attempts += 1
        k = int(rng.integers(1, gens + 1))
        g = [rng.integers(0, degree, degree).tolist() for _ in range(k)]
        gs = from_transformations(degree, g, "abc"[:k] if k <= 3 else
                                  [chr(ord("a") + i) for i in range(k)])
        key = gs.base.table.tobytes()
        if key in seen:
            continue
        seen.add(key)
        prov = f"sampled(seed={seed}, degree={degree}, draw={attempts}, gens={g})"
        out.append(Entry(gs.base, gs, prov))
    return out


def _fx(name, table, gens):
    S = FiniteSemigroup(table)
    return Entry(S, GeneratedSemigroup(S, "ab"[:len(gens)], gens), f"fixture({name})", name)


def fixtures():
    """The seven named fixtures.

    TRIV1 {0}; Z2 and Z3 cyclic groups under addition; NULL3 with zero 0 and
    a = 1, b = 2; SL2 with e = 0, f = 1 and ef = fe = ff = f; LZ2 (xy = x);
    RZ2 (xy = y).
    """
    return [
        _fx("TRIV1", [[0]], [0]),
        _fx("Z2", [[0, 1], [1, 0]], [1]),
        _fx("Z3", [[(i + j) % 3 for j in range(3)] for i in range(3)], [1]),
        _fx("NULL3", [[0, 0, 0]] * 3, [1, 2]),
        _fx("SL2", [[0, 1], [1, 1]], [0, 1]),
        _fx("LZ2", [[0, 0], [1, 1]], [0, 1]),
        _fx("RZ2", [[0, 1], [0, 1]], [0, 1]),
    ]


def fixture(name):
    for e in fixtures():
        if e.name == name:
            return e
    raise KeyError(name)


def default_catalog(max_order=MAX_ENUM_ORDER, samples=DEFAULT_SAMPLE["count"],
                    degree=DEFAULT_SAMPLE["degree"], gens=DEFAULT_SAMPLE["gens"],
                    seed=DEFAULT_SAMPLE["seed"]):
    """Labeled enumeration up to ``max_order``, seeded samples, then fixtures."""
    out = []
    for n in range(1, max_order + 1):
        for i, S in enumerate(enumerate_order_n(n)):
            out.append(Entry(S, None, f"enumerated(order={n}, index={i})"))
    if samples:
        out.extend(sample_transformation_semigroups(degree, gens, samples, seed))
    out.extend(fixtures())
    return out
