"""Monomial maps: pullbacks, kernel ideals by elimination, monomial re-basing."""

from __future__ import annotations

from typing import Mapping, Sequence

from .groebner import Ideal, eliminate
from .ring import Polynomial, Ring, RingError, VarMap


class NotExpressibleError(ValueError):
    def __init__(self, monomial: Polynomial, detail: str = "not expressible in the basis"):
        super().__init__(f"{monomial}: {detail}")
        self.monomial = monomial


def _single_monomial(p: Polynomial) -> tuple:
    if len(p) != 1 or p.terms[0][1] != 1:
        raise ValueError(f"{p} is not a monomial with coefficient 1")
    return p.terms[0][0]


class MonomialMap:
    """``target variable -> monomial in the source variables``.

    Each image must have the weighted degree of its target variable.
    """

    def __init__(self, source: Ring, target: Ring, images: Mapping[str, Polynomial]):
        if set(source.names) & set(target.names):
            raise RingError("source and target variables must be disjoint")
        self.source = source
        self.target = target
        self.images: dict[str, tuple] = {}
        for name, img in images.items():
            target.index(name)
            if img.ring != source:
                img = img.to_ring(source)
            mono = _single_monomial(img)
            deg = sum(e * w for e, w in zip(mono, source.weights))
            weight = target.weights[target.index(name)]
            if deg != weight:
                raise ValueError(f"image of {name} has weighted degree {deg}, expected {weight}")
            self.images[name] = mono

    @classmethod
    def from_varmap(cls, vm: VarMap, source_vars: Sequence[str] | None = None) -> MonomialMap:
        """Split a workspace varmap into source and target rings.

        Target variables are the mapped names; source variables are those
        occurring in the images (or ``source_vars`` when given).
        """
        ring = vm.ring
        targets = [n for n in ring.names if n in vm.assignments]
        if source_vars is None:
            used = set()
            for img in vm.assignments.values():
                used.update(img.variables())
            source_vars = [n for n in ring.names if n in used]
        src = ring.drop(n for n in ring.names if n not in set(source_vars))
        tgt = ring.drop(n for n in ring.names if n not in set(targets))
        return cls(src, tgt, {n: vm.assignments[n].to_ring(src) for n in targets})

    def image(self, name: str) -> Polynomial:
        return Polynomial(self.source, {self.images[name]: 1})

    def joint_ring(self) -> Ring:
        return self.target.extend(self.source.names, self.source.weights)


def pullback(p: Polynomial, m: MonomialMap) -> Polynomial:
    if p.ring != m.target:
        p = p.to_ring(m.target)
    imgs = []
    for name in m.target.names:
        imgs.append(m.images.get(name))
    out: dict = {}
    n = m.source.nvars
    for mono, c in p.terms:
        acc = [0] * n
        for i, e in enumerate(mono):
            if not e:
                continue
            img = imgs[i]
            if img is None:
                raise RingError(f"variable {m.target.names[i]!r} has no image")
            for k in range(n):
                acc[k] += e * img[k]
        key = tuple(acc)
        out[key] = out.get(key, 0) + c
    return Polynomial.from_terms(m.source, out.items())


def kernel_ideal(m: MonomialMap) -> Ideal:
    """All relations among the images, by eliminating the source variables."""
    joint = m.joint_ring()
    gens = [joint.var(t) - m.image(t).to_ring(joint) for t in m.images]
    elim = eliminate(Ideal(joint, gens), m.source.names)
    return Ideal(m.target, [g.to_ring(m.target) for g in elim.generators])


def _solve(target: tuple, basis: list[tuple]) -> list[tuple[int, ...]]:
    """All nonnegative integer k with sum k_j * basis_j == target."""
    sols = []

    def rec(j, rest, ks):
        if j == len(basis):
            if not any(rest):
                sols.append(tuple(ks))
            return
        b = basis[j]
        bound = min((r // e for r, e in zip(rest, b) if e), default=0)
        for k in range(bound, -1, -1):
            rec(j + 1, tuple(r - k * e for r, e in zip(rest, b)), ks + [k])

    rec(0, target, [])
    return sols


def rebase_monomials(mons: Sequence[Polynomial], multiplier: Polynomial, basis: MonomialMap) -> list[Polynomial]:
    """Write ``multiplier * mon`` as a monomial in the basis images."""
    mult = _single_monomial(multiplier.to_ring(basis.source))
    names = list(basis.images)
    vecs = [basis.images[n] for n in names]
    out = []
    for mon in mons:
        mono = _single_monomial(mon.to_ring(basis.source))
        prod = tuple(a + b for a, b in zip(mono, mult))
        sols = _solve(prod, vecs)
        shown = Polynomial(basis.source, {prod: 1})
        if not sols:
            raise NotExpressibleError(shown)
        if len(sols) > 1:
            raise NotExpressibleError(shown, "expressible in more than one way")
        exps = {n: k for n, k in zip(names, sols[0]) if k}
        out.append(basis.target.monomial(exps))
    return out
