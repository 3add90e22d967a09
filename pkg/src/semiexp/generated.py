"""A-generated semigroups (S, phi) and their morphisms."""
import numpy as np

from .errors import (AlphabetMismatch, GeneratorMismatch, NotGenerating,
                     NotMultiplicative, UnknownLetter)
from .semigroup import FiniteSemigroup, I


class GeneratedSemigroup:
    """A finite semigroup together with an onto map from a letter alphabet."""

    def __init__(self, base, alphabet, gen_map):
        if not isinstance(base, FiniteSemigroup):
            base = FiniteSemigroup(base)
        alphabet = tuple(alphabet)
        if not alphabet:
            raise NotGenerating("alphabet is empty")
        if len(set(alphabet)) != len(alphabet):
            raise ValueError(f"repeated letters in alphabet {alphabet}")
        if isinstance(gen_map, dict):
            gen_map = [gen_map[a] for a in alphabet]
        gens = np.array(gen_map, dtype=np.int64)
        if gens.shape != (len(alphabet),):
            raise ValueError("one generator image per letter is required")
        if gens.min() < 0 or gens.max() >= base.n:
            raise ValueError("generator images must be elements of the semigroup")
        gens.setflags(write=False)
        self.base = base
        self.alphabet = alphabet
        self.gens = gens
        self._letter = {a: i for i, a in enumerate(alphabet)}
        self.element_names = None
        size = closure_size(base.table, gens)
        if size != base.n:
            raise NotGenerating(f"generators reach {size} of {base.n} elements")

    def __repr__(self):
        return f"GeneratedSemigroup(n={self.n}, alphabet={''.join(self.alphabet)!r})"

    @property
    def n(self):
        return self.base.n

    @property
    def gen_map(self):
        return {a: int(g) for a, g in zip(self.alphabet, self.gens)}

    def letter_index(self, a):
        try:
            return self._letter[a]
        except KeyError:
            raise UnknownLetter(a) from None

    def encode(self, word):
        return np.array([self.letter_index(a) for a in word], dtype=np.int64)

    def decode(self, codes):
        return "".join(self.alphabet[c] for c in codes)

    def evaluate(self, word):
        return evaluate_word(self, word)


def closure_size(table, gens):
    seen = np.zeros(table.shape[0], dtype=bool)
    frontier = np.unique(gens)
    seen[frontier] = True
    while frontier.size:
        nxt = np.unique(table[np.ix_(frontier, gens)])
        nxt = nxt[~seen[nxt]]
        seen[nxt] = True
        frontier = nxt
    return int(seen.sum())


def with_all_generators(S):
    """Use every element as a generator, letters ``a, b, c, ...``."""
    if S.n > 52:
        raise ValueError("too many elements for single-character letters")
    letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"[:S.n]
    return GeneratedSemigroup(S, letters, list(range(S.n)))


def evaluate_word(gs, word):
    """phi(word); the empty word evaluates to I."""
    codes = gs.encode(word)
    T = gs.base.table
    if codes.size == 0:
        return I
    x = gs.gens[codes[0]]
    for c in codes[1:]:
        x = T[x, gs.gens[c]]
    return int(x)


class Morphism:
    """A validated element map ``src -> tgt`` commuting with the generators."""

    def __init__(self, src, tgt, mapping):
        self.src = src
        self.tgt = tgt
        self.map = np.asarray(mapping, dtype=np.int64)
        self.map.setflags(write=False)

    def __call__(self, x):
        return I if x is I else int(self.map[x])

    def __repr__(self):
        return f"Morphism({self.src.n} -> {self.tgt.n})"

    def is_onto(self):
        return np.unique(self.map).size == self.tgt.n

    def then(self, other):
        return check_morphism(other.map[self.map], self.src, other.tgt)


def check_morphism(f, src, tgt):
    if src.alphabet != tgt.alphabet:
        raise AlphabetMismatch(f"{src.alphabet} != {tgt.alphabet}")
    f = np.asarray(f, dtype=np.int64)
    if f.shape != (src.n,) or f.min() < 0 or f.max() >= tgt.n:
        raise ValueError("element map must send every source element into the target")
    for a, g, h in zip(src.alphabet, src.gens, tgt.gens):
        if f[g] != h:
            raise GeneratorMismatch(a)
    bad = f[src.base.table] != tgt.base.table[np.ix_(f, f)]
    if bad.any():
        x, y = np.unravel_index(np.argmax(bad), bad.shape)
        raise NotMultiplicative(int(x), int(y))
    return Morphism(src, tgt, f)
