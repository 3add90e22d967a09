import pytest

import oracle
from semiexp.corpus import (default_catalog, enumerate_order_n, fixture, fixtures,
                            sample_transformation_semigroups)
from semiexp.errors import NonAssociative, OrderTooLarge, ShapeError, NotGenerating
from semiexp.io import format_catalog, format_entry, load_catalog, load_entry, parse_catalog, parse_entry
from semiexp.semigroup import from_table, from_transformations


@pytest.mark.parametrize("n,count", [(1, 1), (2, 8), (3, 113)])
def test_enumeration_matches_independent_filter(n, count):
    mine = [S.tolist() for S in enumerate_order_n(n)]
    ref = oracle.labeled_semigroups(n)
    assert len(mine) == len(ref) == count
    assert mine == [[list(r) for r in t] for t in ref]
    assert mine == sorted(mine)


def test_enumeration_cap():
    with pytest.raises(OrderTooLarge):
        next(enumerate_order_n(4))


def test_sampling_is_deterministic():
    a = format_catalog(sample_transformation_semigroups(3, 2, 50, 42))
    b = format_catalog(sample_transformation_semigroups(3, 2, 50, 42))
    assert a.encode() == b.encode()
    c = format_catalog(sample_transformation_semigroups(3, 2, 50, 43))
    assert a != c


def test_sampling_dedups_and_closes():
    cat = sample_transformation_semigroups(3, 2, 50, 42)
    keys = [e.semigroup.table.tobytes() for e in cat]
    assert len(set(keys)) == len(keys)
    for e in cat:
        from_table(e.semigroup.n, e.semigroup.tolist())
        assert e.generated is not None and e.generated.base is e.semigroup


def test_degree_one_gives_trivial():
    for seed in range(5):
        cat = sample_transformation_semigroups(1, 3, 10, seed)
        assert len(cat) == 1 and cat[0].semigroup.tolist() == [[0]]


def test_transposition_and_constant():
    gs = from_transformations(2, [(1, 0), (0, 0)], "ab")
    assert gs.base.n == 4


def test_fixtures():
    fx = {e.name: e for e in fixtures()}
    assert set(fx) == {"TRIV1", "Z2", "Z3", "NULL3", "SL2", "LZ2", "RZ2"}
    rz = fx["RZ2"].semigroup
    assert all(rz.mul(x, y) == y for x in range(2) for y in range(2))
    assert fx["SL2"].semigroup.mul(0, 1) == 1
    for e in fx.values():
        from_table(e.semigroup.n, e.semigroup.tolist())
    assert fixture("Z3").semigroup.n == 3
    with pytest.raises(KeyError):
        fixture("Z4")


def test_default_catalog_composition():
    cat = default_catalog()
    assert len(cat) == 1 + 8 + 113 + 100 + 7
    assert [e.name for e in cat[-7:]] == ["TRIV1", "Z2", "Z3", "NULL3", "SL2", "LZ2", "RZ2"]


def test_entry_roundtrip(tmp_path):
    e = fixture("NULL3")
    text = format_entry(e.semigroup, e.generated, e.provenance)
    p = tmp_path / "null3.sg"
    p.write_text(text)
    back = load_entry(p)
    assert back.semigroup == e.semigroup
    assert back.generated.gen_map == e.generated.gen_map
    assert back.name == "NULL3"


def test_catalog_roundtrip(tmp_path):
    cat = default_catalog(max_order=2, samples=10)
    p = tmp_path / "cat.txt"
    p.write_text(format_catalog(cat))
    back = load_catalog(p)
    assert [e.semigroup for e in back] == [e.semigroup for e in cat]
    assert [e.provenance for e in back] == [e.provenance for e in cat]
    assert format_catalog(back) == format_catalog(cat)


def test_parse_tolerates_whitespace_and_comments():
    e = parse_entry("# a comment\n  2\n0   1\n\t1 0  \ngenerators: a=1\n")
    assert e.semigroup.tolist() == [[0, 1], [1, 0]]
    assert e.generated.gen_map == {"a": 1}


@pytest.mark.parametrize("text,exc", [
    ("", ShapeError),
    ("2\n0 1\n", ShapeError),
    ("2\n0 1\n1 x\n", ShapeError),
    ("2\n0 2\n1 0\n", ShapeError),
    ("2\n1 1\n0 0\n", NonAssociative),
    ("2\n0 0\n0 0\ngenerators: a=0\n", NotGenerating),
    ("2\n0 1\n1 0\ngenerators: ab=1\n", ShapeError),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_entry(text)


def test_parse_catalog_blank_separation():
    text = "# provenance: x\n1\n0\n\n\n# provenance: y\n1\n0\n"
    assert [e.provenance for e in parse_catalog(text)] == ["x", "y"]
