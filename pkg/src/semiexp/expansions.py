"""Content, Karnofsky-Rhodes and connected expansions as finite quotients of A+.

Each expansion identifies two words when their paths in the two-sided
Cayley graph carry the same marker set (plus the same image in S):

* content    - the set of edges on the path,
* kr         - the set of transition edges on the path,
* connected  - the set of strongly connected components the path visits.

The quotient is built by breadth-first search over right multiplication by
letters, deduplicating on signatures.
"""
import enum
from dataclasses import dataclass

import numpy as np

from . import kernels
from .cayley import TwoSidedCayleyGraph
from .errors import (AlphabetMismatch, ExpansionTooLarge, GeneratorIncompatible,
                     ImageNotOnto, NotMultiplicative, NotWellDefined)
from .generated import GeneratedSemigroup, Morphism, check_morphism
from .semigroup import FiniteSemigroup

DEFAULT_CAP = 100_000


class ExpansionKind(enum.Enum):
    CONTENT = "content"
    KR = "kr"
    CONNECTED = "connected"

    @property
    def code(self):
        return {"content": kernels.CONTENT, "kr": kernels.KR,
                "connected": kernels.CONNECTED}[self.value]

    @classmethod
    def parse(cls, kind):
        if isinstance(kind, cls):
            return kind
        return cls(str(kind).lower())


@dataclass(frozen=True)
class Signature:
    base: int
    markers: tuple      # sorted edge ids (content, kr) or component ids (connected)


def word_signature(graph, codes, kind):
    kind = ExpansionKind.parse(kind)
    mk = graph.markers(np.asarray(codes, dtype=np.int64), kind.code)
    # first path vertex is (I, phi(u))
    E, gens = graph.E, graph.gs.gens
    x = gens[codes[0]]
    for c in codes[1:]:
        x = E[x, gens[c]]
    return Signature(int(x), tuple(int(v) for v in mk))


class ExpansionResult:
    """The quotient A+/~ with signatures, shortest witnesses and projection."""

    def __init__(self, kind, source, graph, signatures, witnesses, right, quotient, projection):
        self.kind = kind
        self.source = source
        self.graph = graph
        self.signatures = signatures
        self.witnesses = witnesses
        self.right = right
        self.quotient = quotient
        self.projection = projection
        self._index = {s: i for i, s in enumerate(signatures)}

    def __repr__(self):
        return (f"ExpansionResult(kind={self.kind.value}, source_order={self.source.n}, "
                f"order={self.order})")

    @property
    def order(self):
        return self.quotient.n

    def signature(self, word):
        codes = word if isinstance(word, np.ndarray) else self.source.encode(word)
        return word_signature(self.graph, codes, self.kind)

    def class_of(self, word):
        """Quotient element containing ``word``, via a fresh signature scan."""
        return self._index[self.signature(word)]

    def class_by_action(self, word):
        """Quotient element containing ``word``, via the right action by letters."""
        codes = self.source.encode(word)
        x = self.quotient.gens[codes[0]]
        for c in codes[1:]:
            x = self.right[x, c]
        return int(x)

    def product_by_scan(self, x, y):
        return self.class_of(self.witnesses[x] + self.witnesses[y])

    def project(self, x):
        return self.projection(x)

    def fiber(self, e):
        return np.nonzero(self.projection.map == e)[0]

    def summary(self):
        lens = [len(w) for w in self.witnesses]
        return {
            "kind": self.kind.value,
            "source_order": self.source.n,
            "order": self.order,
            "alphabet": "".join(self.source.alphabet),
            "max_witness_length": max(lens),
            "witnesses": list(self.witnesses),
            "projection": self.projection.map.tolist(),
        }


def expand(gs, kind, cap=DEFAULT_CAP):
    kind = ExpansionKind.parse(kind)
    graph = TwoSidedCayleyGraph(gs)
    na = len(gs.alphabet)
    index = {}
    sigs, wit, parent, last = [], [], [], []

    def visit(codes, par, a):
        s = word_signature(graph, codes, kind)
        i = index.get(s)
        if i is None:
            i = len(sigs)
            if i >= cap:
                raise ExpansionTooLarge(f"{kind.value} expansion exceeds {cap} elements")
            index[s] = i
            sigs.append(s)
            wit.append(codes)
            parent.append(par)
            last.append(a)
        return i

    gen_cls = [visit(np.array([a], dtype=np.int64), -1, a) for a in range(na)]
    right = []
    x = 0
    while x < len(sigs):
        row = []
        for a in range(na):
            row.append(visit(np.append(wit[x], a), x, a))
        right.append(row)
        x += 1
    R = np.array(right, dtype=np.int64)
    N = len(sigs)

    # column y of the table is x -> x * witness(y); witness(y) = witness(parent) a
    table = np.empty((N, N), dtype=np.int64)
    for y in range(N):
        if parent[y] < 0:
            table[:, y] = R[:, last[y]]
        else:
            table[:, y] = R[table[:, parent[y]], last[y]]
    Q = FiniteSemigroup(table, check="generators", generators=sorted(set(gen_cls)))
    quotient = GeneratedSemigroup(Q, gs.alphabet, gen_cls)
    phi = np.array([s.base for s in sigs], dtype=np.int64)
    projection = check_morphism(phi, quotient, gs)
    R.setflags(write=False)
    witnesses = [gs.decode(w) for w in wit]
    return ExpansionResult(kind, gs, graph, sigs, witnesses, R, quotient, projection)


def project(er, x):
    return er.project(x)


def _witness_pair(er, x, y):
    return er.witnesses[x], er.witnesses[y]


def induced_morphism(f, erS, erT):
    """The map class_S(u) -> class_T(u) lifting ``f`` to the expansions."""
    if erS.kind != erT.kind:
        raise ValueError(f"kind mismatch: {erS.kind.value} vs {erT.kind.value}")
    if erS.source.alphabet != erT.source.alphabet:
        raise AlphabetMismatch("expansions are over different alphabets")
    g = np.array([erT.class_of(w) for w in erS.witnesses], dtype=np.int64)
    if not np.array_equal(f.map[erS.projection.map], erT.projection.map[g]):
        x = int(np.argmax(f.map[erS.projection.map] != erT.projection.map[g]))
        raise NotWellDefined(erS.witnesses[x], erT.witnesses[g[x]])
    try:
        return check_morphism(g, erS.quotient, erT.quotient)
    except NotMultiplicative as exc:
        raise NotWellDefined(*_witness_pair(erS, *exc.witness)) from None


def letter_substitution_quotient(theta, er_psi, er_phi):
    """Onto map rho with rho(class_psi(u)) = class_phi(theta(u)).

    ``theta`` maps each letter of the psi alphabet to a letter of the phi
    alphabet; it must hit every letter, and psi must equal phi after theta.
    """
    B, A = er_psi.source.alphabet, er_phi.source.alphabet
    if er_psi.kind != ExpansionKind.KR or er_phi.kind != ExpansionKind.KR:
        raise ValueError("letter substitution is defined for the kr expansion")
    if set(theta) != set(B) or set(theta.values()) != set(A):
        raise ImageNotOnto(f"theta must map {B} onto {A}")
    for b in B:
        if er_psi.source.gen_map[b] != er_phi.source.gen_map[theta[b]]:
            raise GeneratorIncompatible(f"psi({b}) != phi(theta({b}))")

    def sub(w):
        return "".join(theta[c] for c in w)

    rho = np.array([er_phi.class_of(sub(w)) for w in er_psi.witnesses], dtype=np.int64)
    P, Q = er_psi.quotient, er_phi.quotient
    for b in B:
        if rho[P.gens[P.letter_index(b)]] != Q.gens[Q.letter_index(theta[b])]:
            raise GeneratorIncompatible(b)
    bad = rho[P.base.table] != Q.base.table[np.ix_(rho, rho)]
    if bad.any():
        x, y = np.unravel_index(np.argmax(bad), bad.shape)
        raise NotWellDefined(*_witness_pair(er_psi, int(x), int(y)))
    if np.unique(rho).size != Q.n:
        raise ImageNotOnto("substitution map is not onto the target expansion")
    return Morphism(P, Q, rho)


def canonical_quotient_map(er_fine, er_coarse):
    """The onto morphism between two expansions of one source, finer to coarser."""
    if er_fine.source is not er_coarse.source and (
            er_fine.source.alphabet != er_coarse.source.alphabet):
        raise AlphabetMismatch("expansions are over different alphabets")
    g = np.array([er_coarse.class_of(w) for w in er_fine.witnesses], dtype=np.int64)
    try:
        return check_morphism(g, er_fine.quotient, er_coarse.quotient)
    except NotMultiplicative as exc:
        raise NotWellDefined(*_witness_pair(er_fine, *exc.witness)) from None


def iterate(gs, kind, depth, cap=DEFAULT_CAP):
    """Expand ``depth`` times, each stage expanding the previous quotient."""
    chain = []
    cur = gs
    for _ in range(depth):
        er = expand(cur, kind, cap=cap)
        chain.append(er)
        cur = er.quotient
    return chain
