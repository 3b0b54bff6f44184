"""The registered scenarios S01-S19."""

from __future__ import annotations

from ..dsl import flip_sign, parse, workspace_sign_sites
from ..formats import CIIdeal, analyze_extrasymmetric, extract_blocks, jerry_check, tom_check
from ..groebner import ideals_equal, is_member
from ..pfaffian import sub_pfaffians_4of6
from ..ring import Polynomial, VarMap
from ..toric import MonomialMap, kernel_ideal, pullback, rebase_monomials
from ..unprojection import (
    BilinearPair,
    NoLongEquationError,
    bilinear_coefficient_matrix,
    cramer_unproject,
    equation_set_symmetry,
    is_linear_in,
    long_equation,
)
from .runner import (
    Check,
    CheckFailed,
    Context,
    Scenario,
    canonical_set,
    expect,
    expect_ideals_equal,
    expect_member,
    expect_same_set,
    ideal_witness,
    ladder,
    nonzero,
    show,
)

# Every display of the source material that some check must exercise.
DISPLAYS = (
    "newton-polygon",
    "tag-relations",
    "colon-trick",
    "binomials",
    "dp6-cubics",
    "extrasymmetric-matrix",
    "pfaffian-repeats",
    "specialisation",
    "segre-minors",
    "tom1-matrix",
    "jerry-matrix",
    "double-jerry-matrix",
    "pair",
    "coefficient-matrices",
    "x-side",
    "a-side",
    "a-matrix",
    "long-equation",
    "involutions",
    "cube-equations",
    "phi-factorisation",
    "tag-deformation",
    "deformation-matrix",
    "base-space",
    "unprojection-equations",
    "component-transformations",
    "elliptic-matrix",
    "elliptic-base",
    "elliptic-tom",
    "tom-jerry-definitions",
)


def _maxpf(m) -> list[Polynomial]:
    return [p for _, p in m.maximal_pfaffians()]


def _pf4(m) -> list[Polynomial]:
    return nonzero(p for _, p in sub_pfaffians_4of6(m))


def _ci(ctx: Context, name: str = "ci") -> CIIdeal:
    gens = []
    for g in ctx.ws.ideal(name):
        v = g.variables()
        if len(v) != 1 or g != ctx.ws.ring.var(v[0]):
            raise CheckFailed(f"complete intersection generator {g} is not a variable")
        gens.append(v[0])
    return CIIdeal(ctx.ws.ring, gens)


def _numbered(ws, stem: str) -> list:
    """The polynomials ``stem1, stem2, ...`` of a workspace, in order."""
    out, k = [], 1
    while f"{stem}{k}" in ws.polys:
        out.append(ws.polys[f"{stem}{k}"])
        k += 1
    return out


def _sign_variants(ctx: Context, statements):
    """Workspaces differing from ``ctx`` by one sign flip in ``statements``."""
    for kind, name in statements:
        for site in workspace_sign_sites(ctx.text, kind, name):
            ctx.tick()
            text = flip_sign(ctx.text, site)
            try:
                ws = parse(text)
            except ValueError:
                continue
            line = ctx.text.count("\n", 0, site) + 1
            col = site - ctx.text.rfind("\n", 0, site)
            yield f"{kind} {name}, line {line}, column {col}", ws


# -- S01-S03: toric ----------------------------------------------------------

def _newton(ctx):
    return MonomialMap.from_varmap(ctx.ws.varmap("newton"))


def s01_binomials(ctx):
    m = _newton(ctx)
    for g in ctx.ws.ideal("binomials"):
        r = pullback(g, m)
        expect(r.is_zero(), f"{g} pulls back to {show(r)}")


def s01_tags(ctx):
    m = _newton(ctx)
    for g in ctx.ws.ideal("tags"):
        r = pullback(g, m)
        expect(r.is_zero(), f"{g} pulls back to {show(r)}")


def s02_colon(ctx):
    lhs, rhs = ctx.ws.poly("combination"), ctx.ws.poly("colon")
    diff = lhs - rhs
    expect(diff.is_zero(), f"difference {show(diff)}")


def s03_kernel(ctx):
    K = kernel_ideal(_newton(ctx))
    ctx.state["kernel"] = K
    ring = K.ring
    expect_ideals_equal(list(K.generators), [g.to_ring(ring) for g in ctx.ws.ideal("binomials")])
    return f"{len(K.generators)} generators after elimination"


def s03_binomial_gens(ctx):
    K = ctx.state.get("kernel") or kernel_ideal(_newton(ctx))
    m = _newton(ctx)
    for g in K.generators:
        expect(len(g) == 2, f"generator {g} is not a binomial")
        expect(pullback(g, m).is_zero(), f"generator {g} does not pull back to 0")


# -- S04-S08: extrasymmetric, Tom and Jerry ----------------------------------

def _lam(ctx):
    return ctx.ws.ring.var("la")


def s04_blocks(ctx):
    try:
        extract_blocks(ctx.ws.matrix("N"), _lam(ctx))
    except ValueError as exc:
        raise CheckFailed(str(exc)) from None


def s04_counts(ctx):
    rep = analyze_extrasymmetric(ctx.ws.matrix("N"), _lam(ctx))
    counts = rep.counts()
    expect(counts == (9, 6, 0), f"distinct/repeats/zeros = {counts}, expected (9, 6, 0)")
    lam = sum(1 for r in rep.repeats if not r.factor.is_constant())
    return f"repeats: {6 - lam} up to sign, {lam} up to a factor la"


def s05_specialise(ctx):
    m = ctx.ws.matrix("N").substitute(ctx.ws.varmap("section"))
    rep = analyze_extrasymmetric(m, ctx.ws.ring.zero())
    counts = rep.counts()
    expect(counts == (9, 3, 3), f"distinct/repeats/zeros = {counts}, expected (9, 3, 3)")
    expect_same_set(rep.distinct, ctx.ws.ideal("binomials"), "equations")


def _raw_blocks(m):
    A = [[m[i + 1, j + 4] for j in range(3)] for i in range(3)]
    zero = m.ring.zero()
    B = [[zero] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i + 1, 3):
            B[i][j] = m[i + 1, j + 1]
            B[j][i] = -m[i + 1, j + 1]
    return A, B


def _minors2(M) -> list[Polynomial]:
    out = []
    for r1 in range(3):
        for r2 in range(r1 + 1, 3):
            for c1 in range(3):
                for c2 in range(c1 + 1, 3):
                    out.append(M[r1][c1] * M[r2][c2] - M[r1][c2] * M[r2][c1])
    return out


def s06_minors(ctx):
    m = ctx.ws.matrix("N").substitute(ctx.ws.varmap("at_minus_one"))
    A, B = _raw_blocks(m)
    M = [[A[i][j] + B[i][j] for j in range(3)] for i in range(3)]
    expect_ideals_equal(_minors2(M), _pf4(m))


def s07_deletion(ctx):
    got = ctx.ws.matrix("N").delete([4])
    tom = ctx.ws.matrix("tom")
    if got != tom:
        for key in sorted(set(got.upper()) | set(tom.upper())):
            if got[key] != tom[key]:
                raise CheckFailed(f"entry m{key[0]}{key[1]}: N gives {got[key]}, matrix has {tom[key]}")


def s07_tom(ctx):
    res = tom_check(ctx.ws.matrix("tom"), 1, _ci(ctx))
    expect(res.passed, "; ".join(map(str, res.witnesses)))


def s07_pfaffians(ctx):
    """The Pfaffians of the Tom matrix are the a-free 4x4 Pfaffians of N."""
    rep = analyze_extrasymmetric(ctx.ws.matrix("N"), _lam(ctx))
    n_free = [p for p in rep.distinct if "a" not in p.variables()]
    expect_same_set(_maxpf(ctx.ws.matrix("tom")), n_free)


def s08_jerry(ctx):
    res = jerry_check(ctx.ws.matrix("jerry"), 2, 3, _ci(ctx))
    expect(res.passed, "; ".join(map(str, res.witnesses)))
    expect(res.pivot_is_variable, f"pivot m23 = {ctx.ws.matrix('jerry')[2, 3]} is not a generator")
    return "pivot m23 = x"


def s08_split(ctx):
    eqs = ctx.ws.ideal("binomials")
    with_a = [e for e in eqs if "a" in e.variables()]
    free = [e for e in eqs if "a" not in e.variables()]
    expect(len(with_a) == 4 and all(is_linear_in(e, "a") for e in with_a),
           f"{len(with_a)} equations involve a")
    expect_same_set(_maxpf(ctx.ws.matrix("jerry")), free)


# -- S09-S13: double Jerry ---------------------------------------------------

def s09_j45(ctx):
    ws = ctx.ws
    expect_same_set(_maxpf(ws.matrix("J45")), list(ws.ideal("pair")) + list(ws.ideal("x_side")))


def s09_amat(ctx):
    ws = ctx.ws
    expect_same_set(_maxpf(ws.matrix("amat")), list(ws.ideal("pair")) + list(ws.ideal("a_side")))


def _pair(ctx, xvars, yvars):
    m1, m2 = ctx.ws.ideal("pair")
    return BilinearPair(m1, m2, xvars, yvars)


def _coeff_check(ctx, xvars, yvars, name):
    C = bilinear_coefficient_matrix(_pair(ctx, xvars, yvars))
    flat = [c for row in C for c in row]
    want = list(ctx.ws.ideal(name))
    for k, (g, w) in enumerate(zip(flat, want)):
        expect(g == w, f"entry ({k // 2 + 1},{k % 2 + 1}) is {g}, expected {w}")
    expect(len(flat) == len(want), f"{len(want)} entries given, 6 expected")


def s09_coeff_bdg(ctx):
    _coeff_check(ctx, ("b", "d", "g"), ("c", "e", "f"), "coeff_bdg")


def s09_coeff_cef(ctx):
    _coeff_check(ctx, ("c", "e", "f"), ("b", "d", "g"), "coeff_cef")


def _cramer_check(ctx, xvars, yvars, new, name):
    res = cramer_unproject(_pair(ctx, xvars, yvars), new)
    ring = ctx.ws.ring
    s = ring.var(new)
    shown = [s * ring.var(v) - e for v, e in zip(xvars, ctx.ws.ideal(name))]
    for sign in (1, -1):
        if all(g == h.scale(sign) for g, h in zip(res.rhs, shown)):
            return None if sign == 1 else "cofactors agree up to a global sign"
    for g, h in zip(res.rhs, shown):
        if g != h and g != -h:
            raise CheckFailed(f"cofactor {g} against {h}")
    raise CheckFailed("cofactors agree only up to individual signs")


def s09_cramer_x(ctx):
    return _cramer_check(ctx, ("b", "d", "g"), ("c", "e", "f"), "x", "x_side")


def s09_cramer_a(ctx):
    return _cramer_check(ctx, ("c", "e", "f"), ("b", "d", "g"), "a", "a_side")


def s10_long(ctx):
    ws = ctx.ws
    eqs = list(ws.ideal("w8"))
    g = ws.ring.var("g")
    note = ""
    try:
        P = long_equation(eqs, "a", "x")
    except NoLongEquationError:
        P = long_equation(eqs, "a", "x", cancel=g)
        note = "a*x - P lies in the ideal after saturating by g"
    ctx.state["P"] = P
    expect_member(P - ws.poly("long"), eqs)
    return note or None


def s10_cancel_g(ctx):
    ws = ctx.ws
    ring = ws.ring
    L = ring.var("a") * ring.var("x") - ws.poly("long")
    expect_member(ring.var("g") * L, list(ws.ideal("w8")))


def s11_swap(ctx):
    expect(equation_set_symmetry(ctx.ws.ideal("w9"), ctx.ws.varmap("swap")),
           _symmetry_witness(ctx, "swap"))


def s11_negate(ctx):
    expect(equation_set_symmetry(ctx.ws.ideal("w9"), ctx.ws.varmap("negate")),
           _symmetry_witness(ctx, "negate"))


def _symmetry_witness(ctx, name):
    eqs = ctx.ws.ideal("w9")
    have = canonical_set(eqs)
    for e in eqs:
        img = ctx.ws.varmap(name)(e).canonical_sign()
        if img not in have:
            return f"{e} maps to {img}"
    return "multisets differ"


S3_POINTS = ((1, 2), (1, -3), (2, 5))


def s12_cube(ctx):
    ws = ctx.ws
    eqs, cube = list(ws.ideal("w9")), _numbered(ws, "cube")

    def poly_level():
        for k, q in enumerate(cube):
            ctx.tick()
            if not is_member(q, eqs):
                return False, f"cube equation {k + 1} not a member"
        return True, "memberships hold over Q[s,t]"

    def specialised():
        for s, t in S3_POINTS:
            sub = {"s": ws.ring.const(s), "t": ws.ring.const(t)}
            seqs = [e.substitute(sub) for e in eqs]
            for k, q in enumerate(cube):
                ctx.tick()
                if not is_member(q.substitute(sub), seqs):
                    return False, f"cube equation {k + 1} fails at (s,t) = ({s},{t})"
        return True, "memberships hold at (s,t) in " + str(list(S3_POINTS))

    return ladder(ctx, [("polynomial", poly_level), ("specialised", specialised)])


def s12_phi(ctx):
    d = ctx.ws.poly("phi") - ctx.ws.poly("phi_factored")
    expect(d.is_zero(), f"difference {show(d)}")


def s13_tag(ctx):
    ws = ctx.ws
    _, xd, xg = ws.ideal("x_side")
    f, e = ws.ring.var("f"), ws.ring.var("e")
    d = ws.poly("tag") - (f * xd + e * xg)
    expect(d.is_zero(), f"tag - (f*xd + e*xg) = {show(d)}")
    return "cofactors f and e"


# -- S14-S17: deformations ---------------------------------------------------

def s14_base(ctx):
    ws = ctx.ws
    base = [p.substitute(ws.varmap("base")) for p in _maxpf(ws.matrix("def23"))]
    expect_ideals_equal(base, ws.ideal("base_equations"))


def s14_weight_zero(ctx):
    ws = ctx.ws
    got = ws.matrix("def23").substitute(ws.varmap("weight_zero"))
    want = ws.matrix("J45")
    for key in sorted(set(got.upper()) | set(want.upper())):
        expect(got[key] == want[key], f"entry m{key[0]}{key[1]}: {got[key]} against {want[key]}")


def s15_linear(ctx):
    for k, e in enumerate(_numbered(ctx.ws, "unproj")):
        expect(is_linear_in(e, "a"), f"unprojection equation {k + 1} has degree {e.degree_in('a')} in a")


def _s15_sides(ws):
    family = _maxpf(ws.matrix("def23")) + _numbered(ws, "unproj")
    tom = [p.substitute(ws.varmap("tom")).substitute(ws.varmap("tom_section")) for p in family]
    jerry = [p.substitute(ws.varmap("jerry")).substitute(ws.varmap("jerry_section")) for p in family]
    return ideal_witness(nonzero(tom), _pf4(ws.matrix("N"))), ideal_witness(nonzero(jerry), nonzero(ws.ideal("w9")))


S15_POINTS = ((2, 3, 5), (-1, 2, 7), (3, -2, 1))


def _specialise_ws(ws, values):
    sub = {k: ws.ring.const(v) for k, v in values.items()}
    out = parse("ring " + " ".join(ws.ring.names) + " : weights " + " ".join(map(str, ws.ring.weights)) + ";")
    out.matrices = {k: m.substitute(sub) for k, m in ws.matrices.items()}
    out.polys = {k: p.substitute(sub) for k, p in ws.polys.items()}
    out.ideals = {k: tuple(p.substitute(sub) for p in v) for k, v in ws.ideals.items()}
    out.varmaps = {k: VarMap(vm.ring, {v: img.substitute(sub) for v, img in vm.assignments.items()})
                   for k, vm in ws.varmaps.items()}
    return out


def s15_components(ctx):
    """Tom and Jerry sides together, with sign normalisation as a fallback."""

    def judge(ws):
        t, j = _s15_sides(ws)
        if t is None and j is None:
            return True, ""
        return False, "; ".join(f"{side}: {w}" for side, w in (("Tom", t), ("Jerry", j)) if w)

    def displayed():
        return judge(ctx.ws)

    def sign_normalised():
        names = [("poly", f"unproj{k}") for k in range(1, 5)]
        for where, ws in _sign_variants(ctx, names):
            ok, _ = judge(ws)
            if ok:
                return True, f"one sign flipped at {where}: " + _changed_equation(ctx.ws, ws, "unproj")
        return False, "no single sign flip in the unprojection equations works"

    def specialised():
        for la, mu, nu in S15_POINTS:
            ok, note = judge(_specialise_ws(ctx.ws, {"la": la, "mu": mu, "nu": nu}))
            if not ok:
                return False, f"(la,mu,nu) = ({la},{mu},{nu}): {note}"
        return True, "displayed equations at rational points"

    return ladder(ctx, [("displayed", displayed), ("sign-normalized", sign_normalised),
                        ("specialised", specialised)])


def _changed_equation(old, new, stem):
    for k, (a, b) in enumerate(zip(_numbered(old, stem), _numbered(new, stem)), start=1):
        if a != b:
            return f"{stem}{k} becomes {new.source('poly', f'{stem}{k}')}"
    return "no equation changed"


def s16_base(ctx):
    ws = ctx.ws
    base = [p.substitute(ws.varmap("base")) for p in _maxpf(ws.matrix("def5"))]
    expect_ideals_equal(base, ws.ideal("minors"))


def s17_resolution(ctx):
    ws = ctx.ws
    for q in ws.ideal("minors"):
        r = q.substitute(ws.varmap("resolve"))
        expect(r.is_zero(), f"minor {q} becomes {r}")


def s17_tom_form(ctx):
    res = tom_check(ctx.ws.matrix("tom"), 1, _ci(ctx))
    expect(res.passed, "; ".join(map(str, res.witnesses)))


def _s17_witness(ws, coord="coord", tom="tom"):
    resolved = [p.substitute(ws.varmap("resolve")) for p in _maxpf(ws.matrix("def5"))]
    moved = [p.substitute(ws.varmap(coord)) for p in resolved]
    return ideal_witness(nonzero(moved), nonzero(_maxpf(ws.matrix(tom))))


def s17_displayed(ctx):
    def judge(ws):
        w = _s17_witness(ws)
        return w is None, w or ""

    def sign_normalised():
        for where, ws in _sign_variants(ctx, [("varmap", "coord"), ("skew", "tom")]):
            ok, _ = judge(ws)
            if ok:
                return True, f"one sign flipped at {where}"
        return False, "no single sign flip in the transformation or the target matrix works"

    def alternative():
        w = _s17_witness(ctx.ws, "coord_alt")
        return w is None, w or ""

    return ladder(ctx, [("displayed", lambda: judge(ctx.ws)), ("claimed b", alternative),
                        ("sign-normalized", sign_normalised)])


def s17_b_after(ctx):
    ws = ctx.ws
    got = ws.poly("b").substitute(ws.varmap("coord"))
    d = got - ws.poly("b_after")
    expect(d.is_zero(), f"b becomes {got}; difference {show(d)}")


def s17_derived(ctx):
    w = _s17_witness(ctx.ws, "coord_derived", "tom_derived")
    expect(w is None, w or "")
    res = tom_check(ctx.ws.matrix("tom_derived"), 1, _ci(ctx))
    expect(res.passed, "; ".join(map(str, res.witnesses)))


# -- S18-S19 -----------------------------------------------------------------

def s18_rebase(ctx):
    ws = ctx.ws
    basis = MonomialMap.from_varmap(ws.varmap("basis"))
    got = rebase_monomials(ws.ideal("newton"), ws.poly("multiplier"), basis)
    want = [p.to_ring(basis.target) for p in ws.ideal("cubics")]
    expect(len(got) == len(want), f"{len(got)} monomials, expected {len(want)}")
    for k, (g, w) in enumerate(zip(got, want)):
        expect(g == w, f"monomial {k + 1}: {g}, expected {w}")


def s19_cone(ctx):
    ws = ctx.ws
    cone = [p.substitute(ws.varmap("cone")) for p in ws.ideal("w9")]
    expect_ideals_equal(cone, ws.ideal("binomials"))


def _c(name, anchor, fn, *displays):
    return Check(name, anchor, fn, tuple(displays))


SCENARIOS = (
    Scenario(
        "S01-toric-vanish",
        "The 9 binomials and the 6 tag relations vanish on the Newton polygon monomials.",
        "S01-toric-vanish.usr",
        (
            _c("binomials pull back to 0", "toric cone: the 9 binomials", s01_binomials,
               "newton-polygon", "binomials"),
            _c("tag relations pull back to 0", "toric cone: tag relations of consecutive boundary monomials",
               s01_tags, "tag-relations"),
        ),
        mutation=("ideal", "binomials", 1),
    ),
    Scenario(
        "S02-colon-identity",
        "Cancelling e from cf - e^2 and xdf - e^3 leaves e^2 (xd - ce).",
        "S02-colon-identity.usr",
        (_c("colon identity", "toric cone: colon trick for xd - ce", s02_colon, "colon-trick"),),
        mutation=("poly", "colon", 1),
    ),
    Scenario(
        "S03-toric-kernel",
        "Elimination recovers the 9 binomials as the full toric ideal.",
        "S03-toric-kernel.usr",
        (
            _c("kernel equals the binomials", "toric cone: the ideal is generated by 9 binomials",
               s03_kernel, "newton-polygon", "binomials"),
            _c("kernel generators are binomials", "toric cone: binomial generators", s03_binomial_gens),
        ),
        budget=60.0,
        mutation=("ideal", "binomials", 1),
    ),
    Scenario(
        "S04-extrasym-generic",
        "The 15 sub-Pfaffians of the extrasymmetric 6x6 matrix give 9 relations and 6 repeats.",
        "S04-extrasym-generic.usr",
        (
            _c("block form [[B, A], [-A, la*B]]", "extrasymmetric format: block structure", s04_blocks,
               "extrasymmetric-matrix"),
            _c("9 distinct, 6 repeats", "extrasymmetric format: 9 relations and 6 repeats", s04_counts,
               "pfaffian-repeats"),
        ),
        mutation=("skew", "N", 12),
    ),
    Scenario(
        "S05-extrasym-specialise",
        "At la = 0, z = 0, y = c the Pfaffians specialise to the 9 binomials.",
        "S05-extrasym-specialise.usr",
        (_c("specialisation gives the binomials", "extrasymmetric format: specialisation to the cone",
            s05_specialise, "specialisation", "binomials"),),
        mutation=("ideal", "binomials", 1),
    ),
    Scenario(
        "S06-segre-minors",
        "At la = -1 the 2x2 minors of A + B generate the 4x4 Pfaffian ideal.",
        "S06-segre-minors.usr",
        (_c("minors and Pfaffians agree", "extrasymmetric format: minors of A + sqrt(-la) B", s06_minors,
            "segre-minors"),),
        mutation=("skew", "N", 12),
    ),
    Scenario(
        "S07-tom1",
        "Deleting row and column 4 of N gives a Tom_1 matrix for (x, c, e, f).",
        "S07-tom1.usr",
        (
            _c("matrix is N without row and column 4", "Tom unprojection: the projected matrix", s07_deletion,
               "tom1-matrix"),
            _c("Tom_1 condition", "Tom unprojection: entries off row 1 in (x,c,e,f)", s07_tom,
               "tom-jerry-definitions"),
            _c("Pfaffians are the a-free relations", "Tom unprojection: the 5 equations free of a",
               s07_pfaffians),
        ),
        mutation=("skew", "tom", 9),
    ),
    Scenario(
        "S08-jerry23",
        "The cone's matrix is Jerry_23 for (x, c, e, f) with pivot x.",
        "S08-jerry23.usr",
        (
            _c("Jerry_23 condition with pivot x", "double Jerry: pivot is a variable", s08_jerry,
               "jerry-matrix", "tom-jerry-definitions"),
            _c("4 equations linear in a, 5 Pfaffians", "Tom format from the cone: splitting by a", s08_split,
               "binomials"),
        ),
        mutation=("ideal", "binomials", 13),
    ),
    Scenario(
        "S09-double-jerry-pfaffians",
        "Pfaffians and Cramer's rule for the double Jerry deformation.",
        "S09-double-jerry-pfaffians.usr",
        (
            _c("Pfaffians of the deformed matrix", "double Jerry: deformation matrix", s09_j45,
               "double-jerry-matrix", "pair", "x-side"),
            _c("Pfaffians of the a-matrix", "double Jerry: the a half", s09_amat, "a-matrix", "a-side"),
            _c("coefficient matrix for (b,d,g)", "double Jerry: 3x2 coefficient matrix", s09_coeff_bdg,
               "coefficient-matrices"),
            _c("coefficient matrix for (c,e,f)", "double Jerry: 2x3 coefficient matrix", s09_coeff_cef,
               "coefficient-matrices"),
            _c("Cramer's rule predicts the x equations", "double Jerry: minors of the 3x2 matrix",
               s09_cramer_x, "x-side"),
            _c("Cramer's rule predicts the a equations", "double Jerry: adjoining a", s09_cramer_a, "a-side"),
        ),
        mutation=("ideal", "x_side", 2),
    ),
    Scenario(
        "S10-long-equation",
        "The long equation ax = (b + nu g)(c + nu f) - mu(df - eg).",
        "S10-long-equation.usr",
        (
            _c("long equation by elimination", "double Jerry: the long equation", s10_long, "long-equation"),
            _c("g times the long equation is in the ideal", "double Jerry: rewriting until divisible by g",
               s10_cancel_g, "long-equation"),
        ),
        mutation=("poly", "long", 4),
    ),
    Scenario(
        "S11-involutions",
        "The 9 equations are permuted by both involutions.",
        "S11-involutions.usr",
        (
            _c("a<->x, b<->c, d<->e, f<->g, mu -> -mu", "double Jerry: the involution", s11_swap, "involutions"),
            _c("d, e, mu -> -d, -e, -mu", "double Jerry: the sign symmetry", s11_negate, "involutions"),
        ),
        mutation=("ideal", "w9", 1),
    ),
    Scenario(
        "S12-s3-cube",
        "In the roots s, t, u of Phi the 9 equations become the minors of the 3-cube.",
        "S12-s3-cube.usr",
        (
            _c("cube equations are members", "S3 symmetry: minors of the 3-cube", s12_cube, "cube-equations"),
            _c("Phi factorisation", "S3 symmetry: Phi = (e - sf)(e - tf)(e - uf)", s12_phi,
               "phi-factorisation"),
        ),
        budget=60.0,
        mutation=("poly", "y0", 1),
    ),
    Scenario(
        "S13-tag-deformation",
        "The tag equation xdf = e^3 deforms to x(df + eg) = Phi(e, f).",
        "S13-tag-deformation.usr",
        (_c("x(df + eg) - Phi = f*(xd - ...) + e*(xg - ...)", "S3 symmetry: deformed tag equation", s13_tag,
            "tag-deformation"),),
        mutation=("poly", "phi", 1),
    ),
    Scenario(
        "S14-base-space",
        "The deformation matrix of the cone has base space gy = gz = 0.",
        "S14-base-space.usr",
        (
            _c("base space (gy, gz)", "deformations: base space equations", s14_base,
               "deformation-matrix", "base-space"),
            _c("agrees with the double Jerry deformation", "deformations: sign of g", s14_weight_zero,
               "deformation-matrix"),
        ),
        mutation=("skew", "def23", 7),
    ),
    Scenario(
        "S15-components",
        "The unprojected family has a Tom and a Jerry component, after the given coordinate changes.",
        "S15-components.usr",
        (
            _c("unprojection equations linear in a", "deformations: the four unprojection equations",
               s15_linear, "unprojection-equations"),
            _c("Tom and Jerry components", "deformations: two components and their coordinate changes",
               s15_components, "component-transformations", "unprojection-equations"),
        ),
        budget=120.0,
        mutation=("skew", "N", 11),
    ),
    Scenario(
        "S16-elliptic-base",
        "For the elliptic cone the base space is given by the minors of [[z,y,u],[q,p,s]].",
        "S16-elliptic-base.usr",
        (_c("base space minors", "elliptic cone: base space", s16_base, "elliptic-matrix", "elliptic-base"),),
        mutation=("skew", "def5", 9),
    ),
    Scenario(
        "S17-elliptic-tom",
        "After the small resolution q, p, s = la*(z, y, u) (the source assigns s twice) "
        "the displayed coordinate change should give a Tom_1 matrix.",
        "S17-elliptic-tom.usr",
        (
            _c("resolution kills the base minors", "elliptic cone: small resolution", s17_resolution,
               "elliptic-base"),
            _c("target matrix is Tom_1", "elliptic cone: the Tom form", s17_tom_form, "elliptic-tom"),
            _c("displayed transformation reaches the Tom form", "elliptic cone: the Tom form", s17_displayed,
               "elliptic-tom"),
            _c("b after the transformation", "elliptic cone: value of b", s17_b_after, "elliptic-tom"),
            _c("derived transformation reaches a Tom_1 form", "elliptic cone: row and column operations",
               s17_derived),
        ),
        budget=120.0,
        mutation=("varmap", "coord_derived", 9),
    ),
    Scenario(
        "S18-dp6-basis",
        "Multiplying the Newton polygon by u^3 gives cubics in U = u^3, V = uv, W = w.",
        "S18-dp6-basis.usr",
        (_c("rebased monomials", "del Pezzo surface: cubics in U, V, W", s18_rebase, "dp6-cubics"),),
        mutation=("ideal", "cubics", 0),
    ),
    Scenario(
        "S19-recover-cone",
        "At mu = nu = 0 and g = 0 the 9 equations give back the cone.",
        "S19-recover-cone.usr",
        (_c("section is the cone", "double Jerry: recovering the cone", s19_cone, "binomials"),),
        mutation=("ideal", "binomials", 1),
    ),
)
