import pytest
from hypothesis import given, settings, strategies as st

from conftest import LZ2, SL2, Z2, Z3
from semiexp.errors import (BudgetExceeded, TermSyntaxError, UnboundVariable,
                            UnknownBasis, UnsupportedExponent)
from semiexp.omega import (BASES, OMEGA, OMEGA_MINUS, OMEGA_PLUS, Concat, Exponent, Power,
                           Pseudoidentity, Var, check_pseudoidentity, eval_term, named_basis,
                           parse_pseudoidentity, parse_term, substitute, variables)
from semiexp.semigroup import FiniteSemigroup

x, y, z, t = Var("x"), Var("y"), Var("z"), Var("t")


def test_parse_simple():
    assert parse_term("(xy)^w") == Power(Concat((x, y)), OMEGA)


def test_parse_limcs2_lhs():
    got = parse_term("(xzy)^(w-1)(x(zt)^wzy)^(w+1)(xzy)^w")
    xzy = Concat((x, z, y))
    mid = Concat((x, Power(Concat((z, t)), OMEGA), z, y))
    assert got == Concat((Power(xzy, OMEGA_MINUS), Power(mid, OMEGA_PLUS), Power(xzy, OMEGA)))


def test_parse_errors():
    with pytest.raises(TermSyntaxError) as exc:
        parse_term("x^")
    assert exc.value.pos == 2
    for bad in ["", "()", "(xy", "x^(w*1)", "xy)", "x^(y+1)", "X"]:
        with pytest.raises(TermSyntaxError):
            parse_term(bad)
    with pytest.raises(UnsupportedExponent):
        parse_term("x^0")
    with pytest.raises(UnsupportedExponent):
        parse_term("x^(w+0)")


def test_parse_general_offsets_and_integers():
    assert parse_term("x^(w+2)") == Power(x, Exponent(True, 2))
    assert parse_term("x^3 y") == Concat((Power(x, Exponent(False, 3)), y))


def test_roundtrip_str():
    for texts in BASES.values():
        for s in texts:
            p = parse_pseudoidentity(s)
            assert parse_pseudoidentity(str(p)) == p


def test_eval_examples():
    z2, z3 = FiniteSemigroup(Z2), FiniteSemigroup(Z3)
    assert eval_term("x^w", z2, {"x": 1}) == 0
    assert eval_term("x^(w+1)", z2, {"x": 1}) == 1
    assert eval_term("x^(w-1)", z3, {"x": 1}) == 2
    assert eval_term("x^(w-2)", z3, {"x": 1}) == 1
    assert eval_term("x^(w+2)", z3, {"x": 1}) == 2
    with pytest.raises(UnboundVariable):
        eval_term("xy", z2, {"x": 1})


def test_check_examples():
    v = check_pseudoidentity(FiniteSemigroup(Z2), "x^w = x^(w+1)")
    assert not v and v.witness == (("x", 1),)
    new = named_basis("LIveeCS-new")[0]
    assert check_pseudoidentity(FiniteSemigroup(LZ2), new)
    v = check_pseudoidentity(FiniteSemigroup(SL2), new)
    assert not v and dict(v.witness) == {"x": 0, "y": 0, "z": 1}
    sl2 = FiniteSemigroup(SL2)
    assert eval_term(new.lhs, sl2, dict(v.witness)) == 1
    assert eval_term(new.rhs, sl2, dict(v.witness)) == 0


def test_budget():
    with pytest.raises(BudgetExceeded):
        check_pseudoidentity(FiniteSemigroup(Z3), "xyzt = tzyx", budget=80)


def test_named_bases():
    new = named_basis("LIveeCS-new")
    assert len(new) == 1 and new[0].variables == ["x", "y", "z"]
    costa = named_basis("LIveeCS-costa")
    assert len(costa) == 2
    assert sorted(set().union(*(p.variables for p in costa))) == ["t", "x", "y", "z"]
    assert str(named_basis("LI-fiber")[0]) == "xyz = xz"
    assert len(named_basis("LImCS-1")) == 1 and len(named_basis("LImCS-2")) == 1
    with pytest.raises(UnknownBasis):
        named_basis("nosuch")


# independent evaluator ----------------------------------------------------------

def slow_eval(term, T, env):
    if isinstance(term, Var):
        return env[term.name]
    if isinstance(term, Concat):
        acc = slow_eval(term.parts[0], T, env)
        for p in term.parts[1:]:
            acc = T[acc][slow_eval(p, T, env)]
        return acc
    s = slow_eval(term.base, T, env)
    pw = [s]
    while T[pw[-1]][s] not in pw:
        pw.append(T[pw[-1]][s])
    i = pw.index(T[pw[-1]][s])      # cycle starts at exponent i + 1
    cycle = pw[i:]
    p = len(cycle)

    def power(m):
        return pw[m - 1] if m <= len(pw) else cycle[(m - 1 - i) % p]

    e = term.exp
    if not e.omega:
        return power(e.offset)
    base = p                        # a multiple of p, pushed past the tail
    while base + e.offset < i + 1:
        base += p
    return power(base + e.offset)


var_st = st.sampled_from("xyz")


def terms(depth=3):
    leaf = var_st.map(Var)
    exps = st.sampled_from([OMEGA, OMEGA_PLUS, OMEGA_MINUS, Exponent(False, 2), Exponent(False, 3),
                            Exponent(True, 2), Exponent(True, -2)])
    return st.recursive(
        leaf,
        lambda inner: st.one_of(
            st.lists(inner, min_size=2, max_size=3).map(lambda ps: Concat(tuple(ps))),
            st.tuples(inner, exps).map(lambda a: Power(*a))),
        max_leaves=6)


SEMIGROUPS = [FiniteSemigroup(t) for t in (Z2, Z3, SL2, LZ2, [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
                                           [[1, 2, 2], [2, 2, 2], [2, 2, 2]],
                                           [[0, 1, 2, 3], [1, 0, 3, 2], [2, 2, 2, 2], [3, 3, 3, 3]])]


@settings(max_examples=200, deadline=None)
@given(terms(), st.sampled_from(range(len(SEMIGROUPS))), st.data())
def test_eval_matches_slow_evaluator(term, si, data):
    S = SEMIGROUPS[si]
    env = {v: data.draw(st.integers(0, S.n - 1)) for v in "xyz"}
    assert eval_term(term, S, env) == slow_eval(term, S.tolist(), env)


@settings(max_examples=200, deadline=None)
@given(terms(), terms(), st.sampled_from(range(len(SEMIGROUPS))), st.data())
def test_substitution_soundness(term, repl, si, data):
    S = SEMIGROUPS[si]
    env = {v: data.draw(st.integers(0, S.n - 1)) for v in "xyz"}
    sub = substitute(term, {"x": repl})
    env2 = dict(env, x=eval_term(repl, S, env))
    assert eval_term(sub, S, env) == eval_term(term, S, env2)


@settings(max_examples=50, deadline=None)
@given(terms(), st.sampled_from(range(len(SEMIGROUPS))))
def test_reflexive_identities_hold(term, si):
    assert check_pseudoidentity(SEMIGROUPS[si], Pseudoidentity(term, term))


def test_omega_laws_through_evaluator(small_corpus):
    for S in small_corpus:
        for s in range(S.n):
            w = eval_term("x^w", S, {"x": s})
            assert S.mul(w, w) == w
            assert S.mul(eval_term("x^(w-1)", S, {"x": s}), s) == w
            assert eval_term("x^(w+1)", S, {"x": s}) == S.mul(w, s)


def test_counterexample_is_lexicographically_least(small_corpus):
    pid = parse_pseudoidentity("xy = yx")
    for S in small_corpus:
        v = check_pseudoidentity(S, pid)
        pairs = [(a, b) for a in range(S.n) for b in range(S.n) if S.mul(a, b) != S.mul(b, a)]
        assert v.ok == (not pairs)
        if pairs:
            assert v.witness == (("x", pairs[0][0]), ("y", pairs[0][1]))


def test_variables():
    assert variables(parse_term("(xy)^w z")) == {"x", "y", "z"}
