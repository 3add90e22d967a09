"""The two-sided Cayley graph of an A-generated semigroup."""
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import EmptyWord
from .semigroup import fmt


class Edge(NamedTuple):
    src: tuple
    label: str
    dst: tuple


@dataclass(frozen=True)
class PathRecord:
    word: str
    vertices: tuple     # vertex ids, length len(word) + 1
    edges: tuple        # edge ids, length len(word)


class TwoSidedCayleyGraph:
    """Vertices S^I x S^I; an a-edge (s1, t1) -> (s2, t2) when s1 a = s2 and t1 = a t2.

    Vertex ``(s, t)`` has id ``s * (n+1) + t`` with I stored as ``n``, so ids
    follow row-major order. Components are numbered by their smallest vertex id.
    """

    def __init__(self, gs):
        self.gs = gs
        S = gs.base
        self.n = S.n
        self.m = m = S.n + 1
        self.nv = m * m
        self.E = S.ext
        src, lab, dst = kernels.cayley_edges(self.E, gs.gens)
        self.src, self.lab, self.dst = src, lab, dst
        self.keys = (src * len(gs.alphabet) + lab) * m + dst % m
        self.scc = kernels.canonical_labels(kernels.scc_labels(self.nv, src, dst))
        self.n_components = int(self.scc.max()) + 1
        self.transition = self.scc[src] != self.scc[dst]
        for a in (src, lab, dst, self.keys, self.scc, self.transition):
            a.setflags(write=False)

    def __repr__(self):
        return (f"TwoSidedCayleyGraph(vertices={self.nv}, edges={self.n_edges}, "
                f"components={self.n_components})")

    @property
    def n_edges(self):
        return int(self.src.size)

    def vertex(self, vid):
        s, t = divmod(int(vid), self.m)
        return (self.gs.base.from_index(s), self.gs.base.from_index(t))

    def vertex_id(self, s, t):
        S = self.gs.base
        return S.to_index(s) * self.m + S.to_index(t)

    def edge(self, eid):
        return Edge(self.vertex(self.src[eid]), self.gs.alphabet[self.lab[eid]],
                    self.vertex(self.dst[eid]))

    def edge_id(self, src, label, dst):
        """Id of the edge ``(src, label, dst)`` given as vertex pairs, or None."""
        key = ((self.vertex_id(*src) * len(self.gs.alphabet) + self.gs.letter_index(label))
               * self.m + self.gs.base.to_index(dst[1]))
        i = int(np.searchsorted(self.keys, key))
        if i < self.keys.size and self.keys[i] == key and self.dst[i] == self.vertex_id(*dst):
            return i
        return None

    def edges(self):
        return [self.edge(i) for i in range(self.n_edges)]

    def components(self):
        """Vertex pairs grouped by component id."""
        out = [[] for _ in range(self.n_components)]
        for v in range(self.nv):
            out[self.scc[v]].append(self.vertex(v))
        return out

    def successors(self, vid):
        lo = np.searchsorted(self.src, vid, side="left")
        hi = np.searchsorted(self.src, vid, side="right")
        return self.dst[lo:hi]

    # paths ---------------------------------------------------------------

    def path_of_word(self, word):
        if len(word) == 0:
            raise EmptyWord("paths are defined for nonempty words only")
        codes = self.gs.encode(word)
        verts, ids = kernels.path_edge_ids(self.E, self.gs.gens, codes, self.keys)
        return PathRecord(str(word), tuple(int(v) for v in verts), tuple(int(e) for e in ids))

    def path_pairs(self, p):
        return [self.vertex(v) for v in p.vertices]

    def transition_edges(self, p):
        """Transition edges of ``p`` in path order, and their set T(p)."""
        seq = tuple(e for e in p.edges if self.transition[e])
        return seq, frozenset(seq)

    def components_met(self, p):
        return frozenset(int(self.scc[v]) for v in p.vertices)

    def content(self, p):
        return frozenset(p.edges)

    def markers(self, codes, kind):
        """Sorted marker ids of the path of an encoded word (see ``kernels.markers``)."""
        return kernels.markers(self.E, self.gs.gens, codes, self.keys,
                               self.transition, self.scc, kind)

    def factorization(self, word, eid):
        """Factorizations ``word = u1 a u2`` through edge ``eid`` of its path."""
        p = self.path_of_word(word)
        return [(word[:i], word[i], word[i + 1:]) for i, e in enumerate(p.edges) if e == eid]

    # export --------------------------------------------------------------

    def to_dot(self, word=None):
        palette = ["#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                   "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"]
        on_path = set()
        path_vs = set()
        if word:
            p = self.path_of_word(word)
            on_path = set(p.edges)
            path_vs = set(p.vertices)
        lines = ["digraph cayley2 {", "  node [style=filled];"]
        for v in range(self.nv):
            s, t = self.vertex(v)
            c = palette[self.scc[v] % len(palette)]
            extra = ", penwidth=3" if v in path_vs else ""
            lines.append(f'  v{v} [label="({fmt(s)},{fmt(t)})", fillcolor="{c}", '
                         f'scc={self.scc[v]}{extra}];')
        for i in range(self.n_edges):
            attrs = [f'label="{self.gs.alphabet[self.lab[i]]}"']
            if self.transition[i]:
                attrs.append("style=bold")
            if i in on_path:
                attrs.append("color=red")
            lines.append(f"  v{self.src[i]} -> v{self.dst[i]} [{', '.join(attrs)}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(gs):
    return TwoSidedCayleyGraph(gs)


def path_of_word(graph, word):
    return graph.path_of_word(word)


def transition_edges(graph, p):
    return graph.transition_edges(p)


def components_met(graph, p):
    return graph.components_met(p)


def content(graph, p):
    return graph.content(p)
