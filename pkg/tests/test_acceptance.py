"""Acceptance suite: one PASS/FAIL line per criterion.

Run directly (``python tests/test_acceptance.py``) for the bare list, or
through pytest, which prints the same lines as it goes.
"""

from __future__ import annotations

import functools
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from unproj.formats import analyze_extrasymmetric  # noqa: E402
from unproj.scenarios import PASS, FAIL, SCENARIOS, mutated_workspace, run_all, run_scenario  # noqa: E402

from conftest import load  # noqa: E402


def _timed(*names):
    reports, seconds = [], []
    for n in names:
        t0 = time.monotonic()
        reports.append(run_scenario(n))
        seconds.append(time.monotonic() - t0)
    return reports, seconds


def _scenarios(names, limit, extra=None):
    reports, seconds = _timed(*names)
    notes = []
    ok = True
    for r, s in zip(reports, seconds):
        notes.append(f"{r.scenario[:3]} {r.status} in {s:.2f}s")
        if r.status != PASS:
            ok = False
            bad = next(c for c in r.checks if c.status != PASS)
            notes.append(f"first problem: {bad.name}: {bad.witness or bad.detail}")
        if s >= limit:
            ok = False
            notes.append(f"over the {limit}s limit")
    if extra is not None and ok:
        good, note = extra(reports)
        ok = ok and good
        if note:
            notes.append(note)
    return ok, "; ".join(notes)


def _level(report):
    for c in report.checks:
        if c.detail and c.detail.startswith("level:"):
            return c.detail
    return ""


def c1():
    return _scenarios(["S03"], 60)


def c2():
    def counts(_):
        generic = load("S04-extrasym-generic.usr")
        g = analyze_extrasymmetric(generic.matrix("N"), generic.ring.var("la")).counts()
        spec = load("S05-extrasym-specialise.usr")
        m = spec.matrix("N").substitute(spec.varmap("section"))
        s = analyze_extrasymmetric(m, spec.ring.zero()).counts()
        return g == (9, 6, 0) and s == (9, 3, 3), f"generic {g}, specialised {s}"
    return _scenarios(["S04", "S05"], 5, counts)


def c3():
    return _scenarios(["S06"], 10)


def c4():
    return _scenarios(["S07", "S08"], 1)


def c5():
    return _scenarios(["S09", "S10"], 10)


def c6():
    return _scenarios(["S11"], 1)


def c7():
    def strongest(reports):
        level = _level(reports[0])
        return level.startswith("level: polynomial"), level
    return _scenarios(["S12"], 60, strongest)


def c8():
    return _scenarios(["S13"], 1)


def c9():
    return _scenarios(["S14", "S16"], 5)


def c10():
    def logged(reports):
        level = _level(reports[0])
        return bool(level), level
    return _scenarios(["S15"], 120, logged)


def c11():
    return _scenarios(["S17"], 120)


def c12():
    import test_dsl
    import test_groebner
    import test_pfaffian
    import test_ring

    suites = [
        ("Pf^2 = det", test_pfaffian.test_pfaffian_squared_is_determinant),
        ("ring axioms", test_ring.test_ring_axioms),
        ("substitution homomorphism", test_ring.test_substitution_is_a_homomorphism),
        ("reduced basis seed independence", test_groebner.test_reduced_basis_is_seed_independent_on_shipped_ideals),
        ("round trip", test_dsl.test_round_trip_of_shipped_workspaces),
        ("printed expressions", test_dsl.test_printed_polynomials_parse_back),
        ("fuzzed token streams", test_dsl.test_parser_is_total_on_token_soup),
        ("fuzzed text", test_dsl.test_parser_is_total_on_arbitrary_text),
    ]
    failed = []
    for name, fn in suites:
        try:
            fn()
        except Exception as exc:  # report, do not stop
            failed.append(f"{name}: {type(exc).__name__}")
    baseline = {r.scenario: r for r in run_all()}
    for s in SCENARIOS:
        mutated = run_scenario(s.name, mutated_workspace(s))
        flipped = [m.name for b, m in zip(baseline[s.name].checks, mutated.checks)
                   if b.status == PASS and m.status == FAIL]
        if mutated.status != FAIL or not flipped:
            failed.append(f"mutation of {s.name[:3]} not detected")
    note = f"{len(suites)} property suites, {len(SCENARIOS)} mutations"
    return not failed, note + ("; " + "; ".join(failed) if failed else "")


CRITERIA = {
    1: ("S03 toric kernel equals the nine binomials", c1),
    2: ("S04/S05 extrasymmetric counts and specialisation", c2),
    3: ("S06 Segre minors at la = -1", c3),
    4: ("S07/S08 Tom_1 and Jerry_23 with pivot", c4),
    5: ("S09/S10 double Jerry Pfaffians and long equation", c5),
    6: ("S11 involutions", c6),
    7: ("S12 cube memberships and Phi factorisation", c7),
    8: ("S13 tag deformation with cofactors f, e", c8),
    9: ("S14/S16 base spaces", c9),
    10: ("S15 Tom and Jerry components", c10),
    11: ("S17 elliptic Tom_1 form", c11),
    12: ("property suites and mutation test", c12),
}

# criteria that cannot hold for the data as displayed; see README
KNOWN_RED = {11}


@functools.lru_cache(maxsize=None)
def evaluate(k: int) -> tuple[bool, str]:
    return CRITERIA[k][1]()


def line(k: int) -> str:
    ok, note = evaluate(k)
    return f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {CRITERIA[k][0]} ({note})"


def _params():
    out = []
    for k in CRITERIA:
        marks = [pytest.mark.xfail(strict=True, reason="displayed transformation does not give the stated matrix")] \
            if k in KNOWN_RED else []
        out.append(pytest.param(k, marks=marks, id=f"criterion-{k:02d}"))
    return out


@pytest.mark.parametrize("k", _params())
def test_criterion(k, capsys):
    text = line(k)
    with capsys.disabled():
        print("\n" + text)
    assert evaluate(k)[0], text


if __name__ == "__main__":
    results = [line(k) for k in CRITERIA]
    print("\n".join(results))
    sys.exit(0 if all(evaluate(k)[0] or k in KNOWN_RED for k in CRITERIA) else 1)
