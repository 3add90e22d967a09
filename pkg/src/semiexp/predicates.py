"""Decidable properties of a single finite semigroup."""
import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .semigroup import I, local_monoid


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"verdict": self.ok, "witness": None if self.witness is None else _jsonable(self.witness)}


def _jsonable(x):
    if x is I:
        return "I"
    if isinstance(x, str):
        return x
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    return int(x)


TRUE = Verdict(True)


def _fail(*w):
    return Verdict(False, tuple(x if x is I or isinstance(x, str) else int(x) for x in w))


class Pseudovariety(enum.Enum):
    TRIVIAL = "Trivial"
    G = "G"
    A = "A"
    SL = "Sl"
    D = "D"
    K = "K"
    LI = "LI"
    LG = "LG"
    LSL = "LSl"
    CS = "CS"
    CR = "CR"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        for pv in cls:
            if pv.value.lower() == str(name).lower():
                return pv
        raise KeyError(f"unknown pseudovariety {name!r}")


# equidivisibility ----------------------------------------------------------

def is_equidivisible(S):
    w = kernels.equidiv_witness(S.ext, S.n, 0)
    return TRUE if w[0] < 0 else _fail(*w)


def is_strongly_equidivisible(S):
    """Every uv = xy admits t1, t2 in S^I with u t1 = x, t1 y = v, u = x t2, y = t2 v."""
    w = kernels.equidiv_witness(S.ext, S.n, 1)
    return TRUE if w[0] < 0 else _fail(*w)


# membership ----------------------------------------------------------------

def _first(mask):
    return np.unravel_index(np.argmax(mask), mask.shape)


def _is_group(T):
    n = T.shape[0]
    full = np.arange(n)
    for a in range(n):
        if not (np.array_equal(np.sort(T[a]), full) and np.array_equal(np.sort(T[:, a]), full)):
            return a
    return None


def _is_semilattice(T):
    bad = T != T.T
    if bad.any():
        return _first(bad)
    d = np.diagonal(T) != np.arange(T.shape[0])
    if d.any():
        return (int(np.argmax(d)),)
    return None


def _is_simple(S):
    """First (a, b) with b outside the ideal S^1 a S^1, or None."""
    T = S.table
    for a in range(S.n):
        ideal = np.zeros(S.n, dtype=bool)
        ideal[a] = True
        ideal[T[a]] = True
        ideal[T[:, a]] = True
        ideal[T[np.ix_(T[:, a], np.arange(S.n))]] = True
        if not ideal.all():
            return a, int(np.argmin(ideal))
    return None


def is_member(S, pv):
    pv = Pseudovariety.parse(pv)
    T, n = S.table, S.n
    E = S.idempotents
    if pv is Pseudovariety.TRIVIAL:
        return TRUE if n == 1 else _fail(0, 1)
    if pv is Pseudovariety.G:
        a = _is_group(T)
        return TRUE if a is None else _fail(a)
    if pv is Pseudovariety.A:
        bad = S.omega != S.omega_plus
        return _fail(np.argmax(bad)) if bad.any() else TRUE
    if pv is Pseudovariety.SL:
        w = _is_semilattice(T)
        return TRUE if w is None else _fail(*w)
    if pv is Pseudovariety.D:
        bad = T[:, E] != E[None, :]
        if bad.any():
            x, j = _first(bad)
            return _fail(x, E[j])
        return TRUE
    if pv is Pseudovariety.K:
        bad = T[E, :] != E[:, None]
        if bad.any():
            j, x = _first(bad)
            return _fail(E[j], x)
        return TRUE
    if pv is Pseudovariety.LI:
        ese = T[T[E, :], E[:, None]]
        bad = ese != E[:, None]
        if bad.any():
            j, s = _first(bad)
            return _fail(E[j], s)
        return TRUE
    if pv in (Pseudovariety.LG, Pseudovariety.LSL):
        test = _is_group if pv is Pseudovariety.LG else _is_semilattice
        for e in E:
            M, _ = local_monoid(S, e)
            if test(M.table) is not None:
                return _fail(e)
        return TRUE
    if pv is Pseudovariety.CR:
        bad = S.omega_plus != np.arange(n)
        return _fail(np.argmax(bad)) if bad.any() else TRUE
    if pv is Pseudovariety.CS:
        v = is_member(S, Pseudovariety.CR)
        if not v:
            return v
        w = _is_simple(S)
        return TRUE if w is None else _fail(*w)
    raise AssertionError(pv)


# letter cancelativity ----------------------------------------------------------

def _cancel_side(gs, left, strict):
    S = gs.base
    E = S.ext
    order = [S.n] + list(range(S.n))          # I first
    letters = range(len(gs.alphabet))
    g = gs.gens
    for ui, u in enumerate(order):
        for v in order[ui:]:
            for a in letters:
                for b in (letters if strict else (a,)):
                    if left:
                        equal = E[g[a], u] == E[g[b], v]
                    else:
                        equal = E[u, g[a]] == E[v, g[b]]
                    if equal and (u != v or a != b):
                        return _fail(S.from_index(u), S.from_index(v),
                                     gs.alphabet[a], gs.alphabet[b])
    return TRUE


def letter_cancelative(gs, side="right", strict="plain"):
    """Right: u a = v b forces u = v (and a = b in super mode); left is dual.

    Witness is ``(u, v, a, b)`` with u, v in S^I and a, b letters.
    """
    if strict not in ("plain", "super"):
        raise ValueError(f"strict must be 'plain' or 'super', got {strict!r}")
    sides = {"right": (False,), "left": (True,), "both": (False, True)}[side]
    for left in sides:
        v = _cancel_side(gs, left, strict == "super")
        if not v:
            return v
    return TRUE
