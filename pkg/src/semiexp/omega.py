"""omega-terms: parsing, evaluation over finite semigroups, pseudoidentities.

Concrete syntax::

    term   := factor+
    factor := atom ['^' exp]
    atom   := variable | '(' term ')'
    exp    := 'w' | '(' 'w' ('+'|'-') digits ')' | digits

Variables are single letters ``a``-``z`` (``w`` is reserved for omega
inside exponents only).  Juxtaposition is concatenation.
"""
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import (BudgetExceeded, TermSyntaxError, UnboundVariable,
                     UnknownBasis, UnsupportedExponent)
from .predicates import TRUE, Verdict

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class Exponent:
    omega: bool
    offset: int     # omega + offset when omega is set, else a positive integer

    def __str__(self):
        if not self.omega:
            return str(self.offset)
        if self.offset == 0:
            return "w"
        return f"(w{self.offset:+d})"


OMEGA = Exponent(True, 0)
OMEGA_PLUS = Exponent(True, 1)
OMEGA_MINUS = Exponent(True, -1)


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Concat:
    parts: tuple

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("Concat needs at least two factors")

    def __str__(self):
        return "".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class Power:
    base: "Term"
    exp: Exponent

    def __str__(self):
        b = str(self.base)
        if not isinstance(self.base, Var):
            b = f"({b})"
        return f"{b}^{self.exp}"


Term = Union[Var, Concat, Power]


def concat(*parts):
    flat = []
    for p in parts:
        flat.extend(p.parts if isinstance(p, Concat) else (p,))
    return flat[0] if len(flat) == 1 else Concat(tuple(flat))


def variables(t):
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Power):
        return variables(t.base)
    return set().union(*(variables(p) for p in t.parts))


def substitute(t, mapping):
    """Replace variables by terms."""
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    if isinstance(t, Power):
        return Power(substitute(t.base, mapping), t.exp)
    return concat(*(substitute(p, mapping) for p in t.parts))


# parsing ---------------------------------------------------------------------

class _Parser:
    def __init__(self, text):
        self.s = text
        self.i = 0

    def skip(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, ch):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            raise TermSyntaxError(f"expected {ch!r}, got {got!r}", self.i)
        self.i += 1

    def term(self):
        factors = []
        while True:
            c = self.peek()
            if c == "(" or _is_var(c):
                factors.append(self.factor())
            else:
                break
        if not factors:
            got = self.peek() or "end of input"
            raise TermSyntaxError(f"expected a variable or '(', got {got!r}", self.i)
        return concat(*factors)

    def factor(self):
        c = self.peek()
        if c == "(":
            self.i += 1
            atom = self.term()
            self.expect(")")
        else:
            atom = Var(c)
            self.i += 1
        if self.peek() == "^":
            self.i += 1
            atom = Power(atom, self.exponent())
        return atom

    def digits(self):
        self.skip()
        j = self.i
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        if j == self.i:
            got = self.s[self.i] if self.i < len(self.s) else "end of input"
            raise TermSyntaxError(f"expected digits, got {got!r}", self.i)
        return int(self.s[j:self.i])

    def exponent(self):
        c = self.peek()
        if c in ("w", "ω"):
            self.i += 1
            return OMEGA
        if c.isdigit():
            pos = self.i
            k = self.digits()
            if k < 1:
                raise UnsupportedExponent(f"exponent {k} at offset {pos} is not positive")
            return Exponent(False, k)
        if c == "(":
            self.i += 1
            if self.peek() not in ("w", "ω"):
                raise TermSyntaxError("expected 'w' in exponent", self.i)
            self.i += 1
            sign = self.peek()
            if sign not in ("+", "-"):
                raise TermSyntaxError(f"expected '+' or '-', got {sign or 'end of input'!r}", self.i)
            self.i += 1
            pos = self.i
            k = self.digits()
            if k < 1:
                raise UnsupportedExponent(f"offset {k} at offset {pos} must be at least 1")
            self.expect(")")
            return Exponent(True, k if sign == "+" else -k)
        got = c or "end of input"
        raise TermSyntaxError(f"expected an exponent, got {got!r}", self.i)


def _is_var(c):
    return len(c) == 1 and "a" <= c <= "z" and c != "w"


def parse_term(text):
    p = _Parser(text)
    t = p.term()
    if p.peek():
        raise TermSyntaxError(f"unexpected {p.peek()!r}", p.i)
    return t


@dataclass(frozen=True)
class Pseudoidentity:
    lhs: Term
    rhs: Term

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"

    @property
    def variables(self):
        return sorted(variables(self.lhs) | variables(self.rhs))


def parse_pseudoidentity(text):
    if text.count("=") != 1:
        raise TermSyntaxError("expected exactly one '='", text.find("=") if "=" in text else len(text))
    left, right = text.split("=")
    lhs = parse_term(left)
    try:
        rhs = parse_term(right)
    except TermSyntaxError as exc:
        raise TermSyntaxError(str(exc).rsplit(" at offset", 1)[0], exc.pos + len(left) + 1) from None
    return Pseudoidentity(lhs, rhs)


# evaluation --------------------------------------------------------------------

def _pow(T, x, k):
    acc = x
    for _ in range(k - 1):
        acc = T[acc, x]
    return acc


def eval_vec(t, S, env):
    """Evaluate over arrays of assignments at once; ``env`` maps names to index arrays."""
    T = S.table
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise UnboundVariable(t.name) from None
    if isinstance(t, Concat):
        acc = eval_vec(t.parts[0], S, env)
        for p in t.parts[1:]:
            acc = T[acc, eval_vec(p, S, env)]
        return acc
    x = eval_vec(t.base, S, env)
    e = t.exp
    if not e.omega:
        return _pow(T, x, e.offset)
    if e.offset == 0:
        return S.omega[x]
    if e.offset > 0:
        return T[S.omega[x], _pow(T, x, e.offset)]
    return _pow(T, S.omega_minus[x], -e.offset)


def eval_term(t, S, assignment):
    if isinstance(t, str):
        t = parse_term(t)
    env = {k: np.asarray(v, dtype=np.int64) for k, v in assignment.items()}
    return int(eval_vec(t, S, env))


def check_pseudoidentity(S, pid, budget=DEFAULT_BUDGET):
    """Exhaustive substitution; the counterexample is lexicographically least."""
    if isinstance(pid, str):
        pid = parse_pseudoidentity(pid)
    names = pid.variables
    total = S.n ** len(names)
    if total > budget:
        raise BudgetExceeded(f"{total} assignments exceed the budget of {budget}")
    grid = np.indices((S.n,) * len(names)).reshape(len(names), -1)
    env = dict(zip(names, grid))
    bad = eval_vec(pid.lhs, S, env) != eval_vec(pid.rhs, S, env)
    bad = np.broadcast_to(bad, (total,))
    if not bad.any():
        return TRUE
    q = int(np.argmax(bad))
    return Verdict(False, tuple((v, int(grid[i, q])) for i, v in enumerate(names)))


def check_all(S, pids, budget=DEFAULT_BUDGET):
    """All pseudoidentities at once; witness is ``(index, *assignment)``."""
    for i, pid in enumerate(pids):
        v = check_pseudoidentity(S, pid, budget)
        if not v:
            return Verdict(False, (i,) + v.witness)
    return TRUE


BASES = {
    "LIveeCS-new": ["(xy)^w(xz)^w(xy)^w = (xy)^w"],
    "LIveeCS-costa": ["z^w(xy)^wxt^w = z^wxt^w", "xy^wz = (xy^wz)^(w+1)"],
    "LImCS-1": ["((x(zt)^wzy)^w xzy (x(zt)^wzy)^w)^w = (x(zt)^wzy)^w"],
    "LImCS-2": ["(xzy)^(w-1)(x(zt)^wzy)^(w+1)(xzy)^w = (xzy)^w"],
    "LI-fiber": ["xyz = xz"],
}


def named_basis(name):
    try:
        return [parse_pseudoidentity(s) for s in BASES[name]]
    except KeyError:
        raise UnknownBasis(name) from None
