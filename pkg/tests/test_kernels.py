"""Numba and numpy paths must agree exactly."""
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from semiexp import _jit, kernels
from semiexp.semigroup import from_transformations

tables = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n).map(
        lambda xs: np.array(xs, dtype=np.int64).reshape(n, n)))


@settings(max_examples=200, deadline=None)
@given(tables)
def test_assoc_witness_backends_agree(T):
    assert kernels.assoc_witness_nb(T).tolist() == kernels.assoc_witness_np(T).tolist()


def test_batch_associative_backends_agree():
    import itertools
    T = np.array(list(itertools.product(range(2), repeat=4)), dtype=np.int64).reshape(-1, 2, 2)
    assert np.array_equal(kernels.batch_associative_nb(T), kernels.batch_associative_np(T))


def _samples():
    rng = np.random.default_rng(3)
    out = []
    for _ in range(15):
        d = int(rng.integers(1, 4))
        k = int(rng.integers(1, 3))
        out.append(from_transformations(d, [rng.integers(0, d, d) for _ in range(k)], "ab"[:k]))
    return out


@pytest.mark.parametrize("gs", _samples(), ids=lambda g: f"n{g.n}")
def test_cayley_and_scc_backends_agree(gs):
    E = gs.base.ext
    a = kernels.cayley_edges_nb(E, gs.gens)
    b = kernels.cayley_edges_np(E, gs.gens)
    for x, y in zip(a, b):
        assert np.array_equal(x, y)
    src, _, dst = a
    nv = E.shape[0] ** 2
    la = kernels.canonical_labels(kernels.scc_labels_nb(nv, src, dst))
    lb = kernels.canonical_labels(kernels.scc_labels_np(nv, src, dst))
    assert np.array_equal(la, lb)


@pytest.mark.parametrize("gs", _samples(), ids=lambda g: f"n{g.n}")
def test_markers_backends_agree(gs):
    from semiexp.cayley import TwoSidedCayleyGraph
    G = TwoSidedCayleyGraph(gs)
    rng = np.random.default_rng(0)
    for _ in range(50):
        w = rng.integers(0, len(gs.alphabet), int(rng.integers(1, 12)))
        for kind in (0, 1, 2):
            a = kernels.markers_nb(G.E, gs.gens, w, G.keys, G.transition, G.scc, kind)
            b = kernels.markers_np(G.E, gs.gens, w, G.keys, G.transition, G.scc, kind)
            assert np.array_equal(a, b)


def test_equidiv_backends_agree(small_corpus):
    for S in small_corpus:
        for mode in (0, 1):
            a = kernels.equidiv_witness_nb(S.ext, S.n, mode)
            b = kernels.equidiv_witness_np(S.ext, S.n, mode)
            assert a.tolist() == b.tolist()


def test_canonical_labels_by_smallest_vertex():
    assert kernels.canonical_labels(np.array([5, 3, 5, 9, 3])).tolist() == [0, 1, 0, 2, 1]


def test_env_flag_selects_numpy_backend():
    env = dict(os.environ, SEMIEXP_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c",
                          "import semiexp; from semiexp import kernels;"
                          "print(semiexp.BACKEND, kernels.assoc_witness is kernels.assoc_witness_np)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["numpy", "True"]


def test_numpy_backend_end_to_end():
    """A small expansion run entirely without numba gives the same quotient."""
    code = ("from semiexp.corpus import fixture; from semiexp.expansions import expand;"
            "er = expand(fixture('NULL3').generated, 'kr');"
            "print(er.order, er.quotient.base.table.sum())")
    env = dict(os.environ, SEMIEXP_DISABLE_NUMBA="1")
    a = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    b = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    assert a.stdout == b.stdout


def test_backend_name():
    assert _jit.BACKEND in ("numba", "numpy")
