"""Finite semigroups given by multiplication tables."""
from functools import cached_property

import numpy as np

from . import kernels
from .errors import (DegreeMismatch, EmptyGeneratorSet, NonAssociative,
                     NotIdempotent, ShapeError)


class _Identity:
    """The element adjoined to form S^I."""
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "I"

    def __reduce__(self):
        return (_Identity, ())


I = _Identity()


def fmt(x):
    return "I" if x is I else str(x)


class FiniteSemigroup:
    """A validated multiplication table on ``0..n-1``.

    ``check`` selects the associativity test: ``"full"`` scans all n^3
    triples, ``"generators"`` runs Light's test against ``generators``
    (sound when they generate), ``"none"`` trusts the caller.
    """

    def __init__(self, table, *, check="full", generators=None):
        T = np.array(table, dtype=np.int64)
        if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
            raise ShapeError(f"expected a non-empty square table, got shape {T.shape}")
        n = T.shape[0]
        if T.min() < 0 or T.max() >= n:
            raise ShapeError(f"entries must lie in [0, {n})")
        if check == "full":
            w = kernels.assoc_witness(T)
        elif check == "generators":
            w = kernels.light_witness(T, np.asarray(generators, dtype=np.int64))
        elif check == "none":
            w = (-1,)
        else:
            raise ValueError(f"unknown check mode {check!r}")
        if w[0] >= 0:
            raise NonAssociative(w)
        T.setflags(write=False)
        self.table = T
        self.n = n

    def __repr__(self):
        return f"FiniteSemigroup(n={self.n})"

    def __eq__(self, other):
        return isinstance(other, FiniteSemigroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __len__(self):
        return self.n

    def tolist(self):
        return self.table.tolist()

    # S^I ---------------------------------------------------------------

    @cached_property
    def ext(self):
        """Extended table of S^I, with I stored as index n."""
        n = self.n
        E = np.empty((n + 1, n + 1), dtype=np.int64)
        E[:n, :n] = self.table
        E[n, :] = np.arange(n + 1)
        E[:, n] = np.arange(n + 1)
        E.setflags(write=False)
        return E

    def to_index(self, x):
        return self.n if x is I else int(x)

    def from_index(self, i):
        return I if i == self.n else int(i)

    def mul(self, x, y):
        """Product on S^I."""
        if x is I:
            return y
        if y is I:
            return x
        return int(self.table[x, y])

    def power(self, s, k):
        x = s
        for _ in range(k - 1):
            x = self.table[x, s]
        return int(x)

    # powers --------------------------------------------------------------

    @cached_property
    def _powers(self):
        out = kernels.power_tables(self.table)
        for a in out:
            a.setflags(write=False)
        return out

    @property
    def omega(self):
        return self._powers[2]

    @property
    def omega_minus(self):
        return self._powers[3]

    @property
    def omega_plus(self):
        return self.table[self.omega, np.arange(self.n)]

    @cached_property
    def idempotents(self):
        d = np.diagonal(self.table)
        return np.nonzero(d == np.arange(self.n))[0]


def from_table(n, entries):
    """Validate ``entries`` as an ``n x n`` associative table."""
    try:
        T = np.array(entries, dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise ShapeError(f"ragged or non-integer table: {exc}") from None
    if T.shape != (n, n):
        raise ShapeError(f"expected shape ({n}, {n}), got {T.shape}")
    return FiniteSemigroup(T)


def idempotent_power(S, s):
    if s is I:
        raise ValueError("s^omega is only defined for elements of S")
    return int(S.omega[s])


def omega_minus_one(S, s):
    if s is I:
        raise ValueError("s^(omega-1) is only defined for elements of S")
    return int(S.omega_minus[s])


def local_monoid(S, e):
    """The monoid eSe, with the embedding of its elements into S."""
    if S.table[e, e] != e:
        raise NotIdempotent(f"{e} is not idempotent")
    emb = np.unique(S.table[S.table[e, :], e])
    pos = np.full(S.n, -1, dtype=np.int64)
    pos[emb] = np.arange(emb.size)
    sub = pos[S.table[np.ix_(emb, emb)]]
    return FiniteSemigroup(sub, check="none"), emb


# transformations ---------------------------------------------------------

class Transformation(tuple):
    """A total map on ``{0..d-1}`` written as its image list, acting on the right."""

    def __new__(cls, image):
        t = super().__new__(cls, (int(x) for x in image))
        d = len(t)
        if any(x < 0 or x >= d for x in t):
            raise ShapeError(f"image {list(t)} is not a map on {{0..{d - 1}}}")
        return t

    @property
    def degree(self):
        return len(self)

    def then(self, other):
        """Left-to-right composite: x(fg) = (xf)g."""
        return Transformation(other[x] for x in self)

    @classmethod
    def identity(cls, d):
        return cls(range(d))

    @classmethod
    def constant(cls, d, c):
        return cls([c] * d)


def transformation_closure(generators):
    """Close ``generators`` under composition.

    Returns the element list in breadth-first order (generators first, with
    repeats dropped) and the index of each generator.
    """
    if not generators:
        raise EmptyGeneratorSet("need at least one generator")
    gens = [Transformation(g) for g in generators]
    d = gens[0].degree
    for g in gens:
        if g.degree != d:
            raise DegreeMismatch(f"generator {list(g)} has degree {g.degree}, expected {d}")
    elems = []
    pos = {}
    for g in gens:
        if g not in pos:
            pos[g] = len(elems)
            elems.append(g)
    i = 0
    while i < len(elems):
        x = elems[i]
        for g in gens:
            y = x.then(g)
            if y not in pos:
                pos[y] = len(elems)
                elems.append(y)
        i += 1
    return elems, [pos[g] for g in gens]


def transformation_table(elems):
    pos = {x: i for i, x in enumerate(elems)}
    return [[pos[x.then(y)] for y in elems] for x in elems]


def from_transformations(d, generators, labels):
    from .generated import GeneratedSemigroup

    if not generators:
        raise EmptyGeneratorSet("need at least one generator")
    for g in generators:
        if len(g) != d:
            raise DegreeMismatch(f"generator {list(g)} has degree {len(g)}, expected {d}")
    labels = list(labels)
    if len(labels) != len(generators) or len(set(labels)) != len(labels):
        raise ValueError("labels must be distinct and match the generators one to one")
    elems, gidx = transformation_closure(generators)
    table = transformation_table(elems)
    S = FiniteSemigroup(table, check="none")
    gs = GeneratedSemigroup(S, labels, gidx)
    gs.element_names = [list(x) for x in elems]
    return gs
