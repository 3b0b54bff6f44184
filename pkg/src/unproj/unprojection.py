"""Cramer-rule unprojection, long equations and symmetry checks of equation sets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .groebner import Ideal, MonomialOrder, buchberger, normal_form, saturate
from .ring import Polynomial, Ring, RingError, VarMap


class BilinearError(ValueError):
    pass


class NoLongEquationError(ValueError):
    """Elimination left the unprojection variables in the normal form."""


@dataclass(frozen=True)
class BilinearPair:
    m1: Polynomial
    m2: Polynomial
    xvars: tuple[str, str, str]
    yvars: tuple[str, ...] = ()

    @property
    def ring(self) -> Ring:
        return self.m1.ring


@dataclass(frozen=True)
class UnprojectionResult:
    variable: str
    equations: tuple[Polynomial, Polynomial, Polynomial]  # s*x_i - g_i
    rhs: tuple[Polynomial, Polynomial, Polynomial]  # g_i
    cofactor_matrix: tuple[tuple[Polynomial, Polynomial], ...]

    def identities_hold(self, pair: BilinearPair) -> bool:
        """Reconstruction ``x . C = (m1, m2)`` and ``g . C = 0``."""
        ring = pair.ring
        xs = [ring.var(v) for v in pair.xvars]
        C = self.cofactor_matrix
        for col, m in enumerate((pair.m1, pair.m2)):
            if sum((x * C[i][col] for i, x in enumerate(xs)), ring.zero()) != m:
                return False
            if not sum((g * C[i][col] for i, g in enumerate(self.rhs)), ring.zero()).is_zero():
                return False
        return True


def bilinear_coefficient_matrix(pair: BilinearPair) -> tuple[tuple[Polynomial, Polynomial], ...]:
    """3x2 matrix ``C`` with ``(x1 x2 x3) . C = (m1, m2)``."""
    ring = pair.ring
    if pair.m2.ring != ring:
        raise RingError("m1 and m2 live in different rings")
    if len(pair.xvars) != 3 or len(set(pair.xvars)) != 3:
        raise BilinearError("need three distinct x variables")
    xi = [ring.index(v) for v in pair.xvars]
    yi = [ring.index(v) for v in pair.yvars]
    cols = []
    for label, m in (("m1", pair.m1), ("m2", pair.m2)):
        for mono, c in m.terms:
            xdeg = sum(mono[i] for i in xi)
            if xdeg != 1:
                what = "no x variable" if xdeg == 0 else "degree > 1 in the x variables"
                term = Polynomial(ring, {mono: c})
                raise BilinearError(f"term {term} of {label} has {what}")
            if yi and sum(mono[i] for i in yi) != 1:
                raise BilinearError(f"term {Polynomial(ring, {mono: c})} of {label} is not linear in the y variables")
        cols.append([m.coefficient_of(v, 1) for v in pair.xvars])
    return tuple((cols[0][i], cols[1][i]) for i in range(3))


def cramer_unproject(pair: BilinearPair, new_variable: str) -> UnprojectionResult:
    """Equations ``s*x_i = (-1)^(i+1) * (minor of C omitting row i)``."""
    ring = pair.ring
    s = ring.var(new_variable)
    C = bilinear_coefficient_matrix(pair)
    rhs = []
    for i in range(3):
        r, q = [k for k in range(3) if k != i]
        minor = C[r][0] * C[q][1] - C[r][1] * C[q][0]
        rhs.append(minor if i % 2 == 0 else -minor)
    eqs = tuple(s * ring.var(v) - g for v, g in zip(pair.xvars, rhs))
    return UnprojectionResult(new_variable, eqs, tuple(rhs), C)


def long_equation(eqs: Sequence[Polynomial], s: str, t: str, *, ring: Ring | None = None,
                  cancel: Polynomial | None = None) -> Polynomial:
    """``P`` free of ``s, t`` with ``s*t - P`` in the ideal of ``eqs``.

    ``P`` is the normal form of ``s*t`` under an order eliminating ``s, t``
    first.  With ``cancel = h`` the ideal is first saturated by ``h``, i.e.
    ``h^k * (s*t - P)`` lies in the ideal of ``eqs`` for some ``k``.
    """
    if ring is None:
        if not eqs:
            raise ValueError("ring needed for an empty equation list")
        ring = eqs[0].ring
    si, ti = ring.index(s), ring.index(t)
    for e in eqs:
        for mono, _ in e.terms:
            if mono[si] > 1 or mono[ti] > 1:
                raise ValueError(f"{e} is not linear in {s} and {t}")
            if mono[si] and mono[ti]:
                raise ValueError(f"{e} already contains {s}*{t}")
    ideal = Ideal(ring, eqs)
    if cancel is not None:
        ideal = saturate(ideal, cancel)
    G = buchberger(ideal, MonomialOrder.block((s, t)))
    P = normal_form(ring.var(s) * ring.var(t), G)
    if s in P.variables() or t in P.variables():
        raise NoLongEquationError(f"normal form of {s}*{t} still involves {s} or {t}: {P}")
    return P


def equation_set_symmetry(eqs: Sequence[Polynomial], m: VarMap) -> bool:
    """Whether ``m`` permutes the equations up to sign (as a multiset)."""
    before = Counter(e.canonical_sign() for e in eqs)
    after = Counter(m(e).canonical_sign() for e in eqs)
    return before == after


def is_linear_in(p: Polynomial, var: str) -> bool:
    """Degree exactly one in ``var``."""
    return p.degree_in(var) == 1
