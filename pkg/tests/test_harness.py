import json

import pytest

from semiexp.corpus import enumerate_order_n, fixture, fixtures, default_catalog
from semiexp.errors import UnknownSuite
from semiexp.harness import (CHECKS, SUITES, entry_from_failure, run_checks, run_suite)
from semiexp.io import Entry
from semiexp.omega import check_all, named_basis
from semiexp.predicates import is_equidivisible


def small_catalog():
    cat = []
    for n in (1, 2, 3):
        cat.extend(Entry(S, None, f"enumerated(order={n}, index={i})")
                   for i, S in enumerate(enumerate_order_n(n)))
    return cat


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nosuch")


def test_scc_counts():
    r = run_suite("scc-counts")
    assert r.passed
    assert r.notes["counts"] == {1: 2, 2: 3, 3: 3, 4: 3, 5: 3, 6: 3}
    assert r.notes["connected_order"] == 2 and r.notes["a2_equals_a3"]


def test_mcknight_storey_instances():
    r = run_suite("mcknight-storey", small_catalog())
    assert r.passed and r.instances == 122


def test_basis_equivalence_with_sl2():
    r = run_suite("basis-equivalence", fixtures())
    assert r.passed and r.instances == 7
    sl2 = fixture("SL2").semigroup
    assert not check_all(sl2, named_basis("LIveeCS-new"))
    assert not check_all(sl2, named_basis("LIveeCS-costa"))


@pytest.mark.parametrize("name", [n for n in CHECKS if n != "congruence"])
def test_suites_pass_on_fixtures(name):
    r = run_suite(name, fixtures())
    assert r.passed, r.failures


def test_congruence_on_one_fixture():
    r = run_suite("congruence", [fixture("SL2")])
    assert r.passed and r.instances == 1


def test_failure_report_roundtrip():
    """An injected check flags non-equidivisible entries; the report must let us rebuild them."""
    def flag(entry):
        v = is_equidivisible(entry.semigroup)
        return None if v else v.to_json()

    cat = small_catalog()
    r = run_checks("equidivisible-probe", flag, cat)
    assert r.instances == len(cat) and r.failures
    back = json.loads(json.dumps(r.to_json()))
    assert back["suite"] == "equidivisible-probe"
    assert len(back["failures"]) == len(r.failures)
    for f in back["failures"]:
        e = entry_from_failure(f)
        v = is_equidivisible(e.semigroup)
        assert not v and v.to_json() == f["witness"]


def test_generators_survive_roundtrip():
    def flag(entry):
        return {"always": True}

    r = run_checks("probe", flag, fixtures())
    for f, e in zip(json.loads(json.dumps(r.to_json()))["failures"], fixtures()):
        back = entry_from_failure(f)
        assert back.semigroup == e.semigroup
        assert back.generated.gen_map == e.generated.gen_map


def test_deterministic_and_parallel_matches_serial():
    cat = default_catalog(max_order=2, samples=10)
    a = run_suite("fiber", cat).to_json()
    b = run_suite("fiber", cat, jobs=2).to_json()
    for d in (a, b):
        d.pop("millis")
    assert a == b


def test_suite_names():
    assert set(SUITES) == {"fiber", "tower", "mcknight-storey", "cs-equidivisible",
                           "basis-equivalence", "lg-inclusion", "omega-laws", "congruence",
                           "scc-counts"}
