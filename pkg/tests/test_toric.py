import pytest

from unproj.groebner import ideals_equal
from unproj.ring import Ring, RingError
from unproj.toric import MonomialMap, NotExpressibleError, kernel_ideal, pullback, rebase_monomials

from conftest import load, shipped_workspaces
from unproj.dsl import parse


def newton():
    ws = load("S01-toric-vanish.usr")
    return ws, MonomialMap.from_varmap(ws.varmap("newton"))


def test_binomials_and_tags_pull_back_to_zero():
    ws, m = newton()
    for name in ("binomials", "tags"):
        for g in ws.ideal(name):
            assert pullback(g, m).is_zero(), (name, str(g))
    a = ws.ring.var("a").to_ring(m.target)
    assert pullback(a, m) == m.source.parse("u^6")


def test_binomials_are_homogeneous_of_degree_twelve():
    ws, m = newton()
    ring = Ring(["a", "b", "c", "d", "e", "f", "x"], [6] * 7)
    for g in ws.ideal("binomials"):
        assert g.to_ring(ring).weighted_degree() == 12


def test_kernel_equals_binomials():
    ws, m = newton()
    K = kernel_ideal(m)
    binomials = [g.to_ring(m.target) for g in ws.ideal("binomials")]
    assert ideals_equal(K, binomials)
    for g in K.generators:
        assert len(g) == 2
        assert pullback(g, m).is_zero()


def test_kernel_trivial_maps():
    src, tgt = Ring(["u"]), Ring(["a", "b"])
    K = kernel_ideal(MonomialMap(src, tgt, {"a": src.var("u"), "b": src.var("u")}))
    assert [g.canonical_sign() for g in K.generators] == [tgt.parse("a - b").canonical_sign()]
    one = Ring(["a"])
    assert len(kernel_ideal(MonomialMap(src, one, {"a": src.var("u")}))) == 0


def test_kernels_of_all_shipped_maps_are_binomial():
    seen = 0
    for fname, text in shipped_workspaces().items():
        ws = parse(text)
        for name, vm in ws.varmaps.items():
            try:
                m = MonomialMap.from_varmap(vm)
            except (ValueError, RingError):
                continue
            seen += 1
            for g in kernel_ideal(m).generators:
                assert len(g) == 2 and pullback(g, m).is_zero(), (fname, name)
    assert seen >= 3


def test_map_validation():
    src, tgt = Ring(["u", "v"], [1, 2]), Ring(["a"], [2])
    with pytest.raises(ValueError):
        MonomialMap(src, tgt, {"a": src.parse("u + v")})
    with pytest.raises(ValueError):
        MonomialMap(src, tgt, {"a": src.parse("u")})
    with pytest.raises(ValueError):
        MonomialMap(src, tgt, {"a": src.parse("2*v")})
    with pytest.raises(RingError):
        MonomialMap(src, Ring(["u"], [1]), {"u": src.var("u")})
    m = MonomialMap(src, Ring(["a", "b"], [2, 1]), {"a": src.var("v")})
    with pytest.raises(RingError):
        pullback(m.target.var("b"), m)


def test_rebase_del_pezzo_cubics():
    ws = load("S18-dp6-basis.usr")
    basis = MonomialMap.from_varmap(ws.varmap("basis"), ["u", "v", "w"])
    got = rebase_monomials(ws.ideal("newton"), ws.poly("multiplier"), basis)
    assert [p.to_ring(ws.ring) for p in got] == list(ws.ideal("cubics"))


def test_rebase_trivial_cases():
    ws = load("S18-dp6-basis.usr")
    basis = MonomialMap.from_varmap(ws.varmap("basis"), ["u", "v", "w"])
    one = ws.ring.one()
    assert rebase_monomials([ws.ring.parse("u^3")], one, basis) == [basis.target.var("U")]
    with pytest.raises(NotExpressibleError) as info:
        rebase_monomials([ws.ring.var("u")], one, basis)
    assert str(info.value.monomial) == "u"
