"""Verification suites: each runs one finite-level claim over a catalog."""
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import corpus
from .cayley import TwoSidedCayleyGraph
from .errors import ExpansionTooLarge, UnknownSuite
from .expansions import (ExpansionKind, canonical_quotient_map, expand,
                         word_signature)
from .generated import GeneratedSemigroup
from .io import Entry
from .omega import check_all, named_basis
from .predicates import Pseudovariety, is_equidivisible, is_member, is_strongly_equidivisible
from .semigroup import FiniteSemigroup

SUITE_CAP = 5000
KINDS = (ExpansionKind.CONTENT, ExpansionKind.KR, ExpansionKind.CONNECTED)


@dataclass
class SuiteReport:
    suite: str
    instances: int = 0
    failures: list = field(default_factory=list)
    millis: float = 0.0
    skipped: int = 0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {"suite": self.suite, "instances": self.instances,
                "failures": self.failures, "millis": round(self.millis, 3),
                "skipped": self.skipped, "notes": self.notes}


class Skip(Exception):
    pass


def _failure(entry, witness):
    gs = entry.generated
    return {
        "semigroup": entry.label,
        "table": entry.semigroup.tolist(),
        "generators": None if gs is None else gs.gen_map,
        "witness": witness,
    }


def entry_from_failure(f):
    S = FiniteSemigroup(f["table"])
    gs = None if f["generators"] is None else GeneratedSemigroup(
        S, list(f["generators"]), list(f["generators"].values()))
    return Entry(S, gs, f["semigroup"])


# per-entry checks: return None on success, a JSON-able witness on failure -----

def check_fiber(entry, cap=SUITE_CAP):
    """x y z = x z inside every fiber of the KR projection over an idempotent."""
    er = expand(entry.as_generated(), ExpansionKind.KR, cap=cap)
    T = er.quotient.base.table
    for e in entry.semigroup.idempotents:
        F = er.fiber(e)
        xy = T[np.ix_(F, F)]
        lhs = T[xy[:, :, None], F[None, None, :]]
        rhs = T[np.ix_(F, F)][:, None, :]
        bad = lhs != rhs
        if bad.any():
            i, j, k = np.unravel_index(np.argmax(bad), bad.shape)
            return {"e": int(e), "xyz": [er.witnesses[F[i]], er.witnesses[F[j]], er.witnesses[F[k]]]}
    return None


def check_tower(entry, cap=SUITE_CAP):
    """content -> kr -> connected -> S, each an onto morphism, composites agree."""
    gs = entry.as_generated()
    ers = {}
    for kind in KINDS:
        try:
            ers[kind] = expand(gs, kind, cap=cap)
        except ExpansionTooLarge:
            if kind is ExpansionKind.CONTENT:
                continue
            raise
    chain = [k for k in KINDS if k in ers]
    maps = [canonical_quotient_map(ers[a], ers[b]) for a, b in zip(chain, chain[1:])]
    for f in maps:
        if not f.is_onto():
            return {"not_onto": f"{f.src.n} -> {f.tgt.n}"}
    # each stage must project to S compatibly with the next
    for f, a, b in zip(maps, chain, chain[1:]):
        if not np.array_equal(ers[b].projection.map[f.map], ers[a].projection.map):
            return {"projection_mismatch": [a.value, b.value]}
    for k in chain:
        if not ers[k].projection.is_onto():
            return {"projection_not_onto": k.value}
    if ExpansionKind.CONTENT not in ers:
        raise Skip("content expansion over cap; kr -> connected -> S checked")
    return None


def check_mcknight_storey(entry):
    strong = is_strongly_equidivisible(entry.semigroup)
    cs = is_member(entry.semigroup, Pseudovariety.CS)
    if bool(strong) != bool(cs):
        return {"strongly_equidivisible": strong.to_json(), "CS": cs.to_json()}
    return None


def check_cs_equidivisible(entry):
    if is_member(entry.semigroup, Pseudovariety.CS) and not is_equidivisible(entry.semigroup):
        return is_equidivisible(entry.semigroup).to_json()
    return None


def check_basis_equivalence(entry, max_order=6):
    S = entry.semigroup
    if S.n > max_order:
        raise Skip(f"order {S.n} > {max_order}")
    new = check_all(S, named_basis("LIveeCS-new"))
    costa = check_all(S, named_basis("LIveeCS-costa"))
    if bool(new) != bool(costa):
        return {"new": _vjson(new), "costa": _vjson(costa)}
    return None


def check_lg_inclusion(entry, max_order=6):
    S = entry.semigroup
    if S.n > max_order:
        raise Skip(f"order {S.n} > {max_order}")
    lg = is_member(S, Pseudovariety.LG)
    one = check_all(S, named_basis("LImCS-1"))
    two = check_all(S, named_basis("LImCS-2"))
    if lg and not one:
        return {"LG_but_fails_LImCS-1": _vjson(one)}
    if two and not lg:
        return {"satisfies_LImCS-2_not_LG": lg.to_json()}
    return None


def check_omega_laws(entry):
    S = entry.semigroup
    T, w, wm, wp = S.table, S.omega, S.omega_minus, S.omega_plus
    s = np.arange(S.n)
    for name, bad in (("idempotent", T[w, w] != w),
                      ("omega_minus_one", T[wm, s] != w),
                      ("omega_plus_one", wp != T[w, s])):
        if bad.any():
            return {"law": name, "s": int(np.argmax(bad))}
    return None


def check_congruence(entry, samples=1000, seed=0, max_len=6):
    """Sampled context checks: sig(u) = sig(v) implies equal signatures of uw, vw, wu, wv."""
    gs = entry.as_generated()
    G = TwoSidedCayleyGraph(gs)
    rng = np.random.default_rng(seed)
    na = len(gs.alphabet)

    def word():
        return rng.integers(0, na, int(rng.integers(1, max_len + 1)))

    for kind in KINDS:
        buckets = {}
        for _ in range(4 * samples):
            w = word()
            buckets.setdefault(word_signature(G, w, kind), []).append(w)
        classes = [b for b in buckets.values() if len(b) > 1] or list(buckets.values())
        for _ in range(samples):
            b = classes[int(rng.integers(len(classes)))]
            u = b[int(rng.integers(len(b)))]
            v = b[int(rng.integers(len(b)))]
            w = word()
            for a, c in ((np.concatenate([u, w]), np.concatenate([v, w])),
                         (np.concatenate([w, u]), np.concatenate([w, v]))):
                if word_signature(G, a, kind) != word_signature(G, c, kind):
                    return {"kind": kind.value, "u": gs.decode(u), "v": gs.decode(v),
                            "w": gs.decode(w)}
    return None


def scc_counts():
    """|C(p_{a^k})| over the trivial semigroup on {a}, k = 1..6, and its connected expansion."""
    S = FiniteSemigroup([[0]])
    gs = GeneratedSemigroup(S, "a", [0])
    G = TwoSidedCayleyGraph(gs)
    counts = {k: len(G.components_met(G.path_of_word("a" * k))) for k in range(1, 7)}
    er = expand(gs, ExpansionKind.CONNECTED)
    return counts, er


def _vjson(v):
    return {"verdict": v.ok, "witness": None if v.witness is None else list(v.witness)}


CHECKS = {
    "fiber": check_fiber,
    "tower": check_tower,
    "mcknight-storey": check_mcknight_storey,
    "cs-equidivisible": check_cs_equidivisible,
    "basis-equivalence": check_basis_equivalence,
    "lg-inclusion": check_lg_inclusion,
    "omega-laws": check_omega_laws,
    "congruence": check_congruence,
}

SUITES = tuple(CHECKS) + ("scc-counts",)


def _run_one(args):
    name, entry = args
    try:
        return "ok", CHECKS[name](entry)
    except Skip as exc:
        return "skip", str(exc)


def run_checks(name, check, catalog, jobs=1):
    report = SuiteReport(name)
    t0 = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_run_one, [(name, e) for e in catalog], chunksize=4))
    else:
        results = []
        for e in catalog:
            try:
                results.append(("ok", check(e)))
            except Skip as exc:
                results.append(("skip", str(exc)))
    for e, (status, w) in zip(catalog, results):
        report.instances += 1
        if status == "skip":
            report.skipped += 1
        elif w is not None:
            report.failures.append(_failure(e, w))
    report.millis = (time.perf_counter() - t0) * 1000
    return report


def default_catalog_for(name):
    if name == "congruence":
        return corpus.fixtures()
    return corpus.default_catalog()


def run_suite(name, catalog=None, jobs=1):
    if name not in SUITES:
        raise UnknownSuite(name)
    if name == "scc-counts":
        t0 = time.perf_counter()
        counts, er = scc_counts()
        report = SuiteReport(name, instances=1)
        expected = {k: (2 if k == 1 else 3) for k in counts}
        a2, a3 = er.class_of("aa"), er.class_of("aaa")
        report.notes = {"counts": counts, "connected_order": er.order, "a2_equals_a3": a2 == a3}
        if counts != expected or er.order != 2 or a2 != a3:
            report.failures.append({"semigroup": "TRIV1/{a}", "table": [[0]],
                                    "generators": {"a": 0}, "witness": report.notes})
        report.millis = (time.perf_counter() - t0) * 1000
        return report
    if catalog is None:
        catalog = default_catalog_for(name)
    return run_checks(name, CHECKS[name], catalog, jobs=jobs)
