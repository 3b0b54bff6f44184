import itertools
import random

import pytest

from unproj.formats import (
    CIIdeal,
    ExtrasymmetricSpec,
    analyze_extrasymmetric,
    build_extrasymmetric,
    extract_blocks,
    jerry_check,
    tom_check,
)
from unproj.pfaffian import SkewMatrix, SkewMatrixError
from unproj.ring import Ring

from conftest import load

RING = Ring(["a", "b", "c", "d", "e", "f", "x", "y", "z", "la"], [1] * 9 + [0])
V = RING.var
XCEF = CIIdeal(RING, ["x", "c", "e", "f"])


def eq3_spec(lam=None, y=None, z=None):
    A = ((V("a"), V("b"), V("d")), (V("b"), V("c"), V("e")), (V("d"), V("e"), V("f")))
    B = (V("z") if z is None else z, V("y") if y is None else y, V("x"))
    return ExtrasymmetricSpec(A, B, V("la") if lam is None else lam)


def test_build_matches_workspace_matrix():
    ws = load("S04-extrasym-generic.usr")
    assert build_extrasymmetric(eq3_spec()).rows() == [
        [p.to_ring(RING) for p in row] for row in ws.matrix("N").rows()
    ]


def test_blocks_round_trip():
    spec = eq3_spec()
    assert extract_blocks(build_extrasymmetric(spec), spec.lam) == spec
    with pytest.raises(ValueError):
        extract_blocks(build_extrasymmetric(spec), RING.const(2))


def test_symmetry_of_a_is_enforced():
    A = ((V("a"), V("b"), V("d")), (V("c"), V("c"), V("e")), (V("d"), V("e"), V("f")))
    with pytest.raises(ValueError):
        ExtrasymmetricSpec(A, (V("x"), V("y"), V("z")), V("la"))


def test_generic_counts():
    spec = eq3_spec()
    report = analyze_extrasymmetric(build_extrasymmetric(spec), spec.lam)
    assert report.counts() == (9, 6, 0)
    factors = sorted(str(r.factor) for r in report.repeats)
    assert factors == ["1", "1", "1", "la", "la", "la"]


def test_specialised_counts_give_the_binomials():
    spec = eq3_spec(lam=RING.zero(), y=V("c"), z=RING.zero())
    report = analyze_extrasymmetric(build_extrasymmetric(spec), spec.lam)
    assert report.counts() == (9, 3, 3)
    ws = load("S05-extrasym-specialise.usr")
    binomials = {g.to_ring(RING).canonical_sign() for g in ws.ideal("binomials")}
    assert set(report.distinct) == binomials


def test_specialisation_commutes():
    spec = eq3_spec()
    section = {"la": RING.zero(), "z": RING.zero(), "y": V("c")}
    N = build_extrasymmetric(spec)
    after = analyze_extrasymmetric(N.substitute(section), RING.zero())
    before = analyze_extrasymmetric(N, spec.lam)
    pushed = {p.substitute(section).canonical_sign() for p in before.distinct} - {RING.zero()}
    assert set(after.distinct) == pushed


def test_zero_matrix_counts():
    zero = ExtrasymmetricSpec(((RING.zero(),) * 3,) * 3, (RING.zero(),) * 3, V("la"))
    m = build_extrasymmetric(zero)
    assert m == SkewMatrix(RING, 6)
    assert analyze_extrasymmetric(m, V("la")).counts() == (0, 0, 15)


def test_analyze_needs_size_six():
    with pytest.raises(SkewMatrixError):
        analyze_extrasymmetric(SkewMatrix(RING, 5), V("la"))


def test_tom_examples():
    ws = load("S07-tom1.usr")
    J = CIIdeal(ws.ring, ["x", "c", "e", "f"])
    res = tom_check(ws.matrix("tom"), 1, J)
    assert res.passed and not res.witnesses
    assert len(res.entries) == 6
    eq5 = load("S08-jerry23.usr")
    J5 = CIIdeal(eq5.ring, ["x", "c", "e", "f"])
    assert tom_check(eq5.matrix("jerry"), 1, J5).passed
    bad = tom_check(eq5.matrix("jerry"), 2, J5)
    assert not bad.passed
    assert {(w.entry, str(w.value)) for w in bad.witnesses} >= {((1, 4), "b"), ((1, 5), "d")}


def test_jerry_examples():
    eq5 = load("S08-jerry23.usr")
    J = CIIdeal(eq5.ring, ["x", "c", "e", "f"])
    res = jerry_check(eq5.matrix("jerry"), 2, 3, J)
    assert res.passed and res.pivot_is_variable
    assert len(res.entries) == 7
    bad = jerry_check(eq5.matrix("jerry"), 1, 4, J)
    assert not bad.passed
    assert {str(w.value) for w in bad.witnesses} >= {"b", "d"}
    dj = load("S09-double-jerry-pfaffians.usr")
    Jd = CIIdeal(dj.ring, ["x", "c", "e", "f"])
    assert jerry_check(dj.matrix("J45"), 2, 3, Jd).passed


def test_index_errors():
    eq5 = load("S08-jerry23.usr")
    J = CIIdeal(eq5.ring, ["x", "c", "e", "f"])
    with pytest.raises(SkewMatrixError):
        tom_check(eq5.matrix("jerry"), 6, J)
    with pytest.raises(SkewMatrixError):
        jerry_check(eq5.matrix("jerry"), 0, 2, J)
    with pytest.raises(ValueError):
        jerry_check(eq5.matrix("jerry"), 2, 2, J)
    with pytest.raises(ValueError):
        CIIdeal(eq5.ring, ["x", "x", "c", "e"])


def test_checks_are_monotone_in_the_ideal():
    rng = random.Random(9)
    names = ["a", "b", "c", "d", "e", "f", "x"]
    ring = Ring(names)
    for _ in range(40):
        upper = {(i, j): ring.var(rng.choice(names)) * rng.randint(1, 2)
                 for i, j in itertools.combinations(range(1, 6), 2) if rng.random() < 0.8}
        m = SkewMatrix(ring, 5, upper)
        small = rng.sample(names, 4)
        big = small + [v for v in names if v not in small][:2]
        Js, Jb = CIIdeal(ring, small), CIIdeal(ring, big)
        for i in range(1, 6):
            assert not tom_check(m, i, Js).passed or tom_check(m, i, Jb).passed
        for j, k in itertools.combinations(range(1, 6), 2):
            assert not jerry_check(m, j, k, Js).passed or jerry_check(m, j, k, Jb).passed
