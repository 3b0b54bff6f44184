"""Extrasymmetric 6x6 matrices and the Tom / Jerry conditions on 5x5 ones."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .pfaffian import SkewMatrix, SkewMatrixError, sub_pfaffians_4of6
from .ring import Polynomial, Ring, RingError


@dataclass(frozen=True)
class ExtrasymmetricSpec:
    """Blocks of ``[[B, A], [-A, lam*B]]``.

    ``A`` is a symmetric 3x3 matrix given as rows; ``B`` is skew and given by
    its upper entries ``(b12, b13, b23)``.
    """

    A: tuple[tuple[Polynomial, ...], ...]
    B: tuple[Polynomial, Polynomial, Polynomial]
    lam: Polynomial

    def __post_init__(self):
        if len(self.A) != 3 or any(len(r) != 3 for r in self.A):
            raise ValueError("A must be 3x3")
        for i in range(3):
            for j in range(3):
                if self.A[i][j] != self.A[j][i]:
                    raise ValueError(f"A is not symmetric at ({i + 1},{j + 1})")
        if len(self.B) != 3:
            raise ValueError("B needs three upper entries")


def build_extrasymmetric(spec: ExtrasymmetricSpec) -> SkewMatrix:
    ring = spec.lam.ring
    b12, b13, b23 = spec.B
    upper = {(1, 2): b12, (1, 3): b13, (2, 3): b23}
    for i in range(3):
        for j in range(3):
            upper[(i + 1, j + 4)] = spec.A[i][j]
    upper[(4, 5)] = spec.lam * b12
    upper[(4, 6)] = spec.lam * b13
    upper[(5, 6)] = spec.lam * b23
    return SkewMatrix(ring, 6, upper)


def extract_blocks(m: SkewMatrix, lam: Polynomial) -> ExtrasymmetricSpec:
    """Inverse of :func:`build_extrasymmetric`; checks the block pattern."""
    if m.size != 6:
        raise SkewMatrixError("expected a 6x6 matrix")
    A = tuple(tuple(m[i + 1, j + 4] for j in range(3)) for i in range(3))
    B = (m[1, 2], m[1, 3], m[2, 3])
    spec = ExtrasymmetricSpec(A, B, lam)
    if build_extrasymmetric(spec) != m:
        raise ValueError("matrix is not extrasymmetric for this lambda")
    return spec


@dataclass(frozen=True)
class Repeat:
    base: tuple[int, ...]
    repeat: tuple[int, ...]
    factor: Polynomial  # repeat Pfaffian = factor * base Pfaffian


@dataclass(frozen=True)
class ExtrasymmetricReport:
    distinct: tuple[Polynomial, ...]
    distinct_quads: tuple[tuple[int, ...], ...]
    repeats: tuple[Repeat, ...]
    zeros: tuple[tuple[int, ...], ...]

    def counts(self) -> tuple[int, int, int]:
        return len(self.distinct), len(self.repeats), len(self.zeros)


def analyze_extrasymmetric(m: SkewMatrix, lam: Polynomial) -> ExtrasymmetricReport:
    """Split the 15 sub-Pfaffians into distinct classes, repeats and zeros.

    A repeat is a Pfaffian equal to +-1 or +-lam times an earlier class
    representative (or whose lam-multiple is a representative).
    """
    pfs = sub_pfaffians_4of6(m)
    zeros = tuple(q for q, p in pfs if p.is_zero())
    classes: list[tuple[tuple[int, ...], Polynomial]] = []
    repeats: list[Repeat] = []
    one = m.ring.one()
    for q, p in pfs:
        if p.is_zero():
            continue
        for base_q, base_p in classes:
            if p == base_p or p == -base_p:
                repeats.append(Repeat(base_q, q, one if p == base_p else -one))
                break
        else:
            classes.append((q, p))
    # lam-multiples between classes; keep the lam-free representative
    lam_repeat: dict[int, tuple[int, Polynomial]] = {}
    if not lam.is_zero():
        for i, (qi, pi) in enumerate(classes):
            for j, (qj, pj) in enumerate(classes):
                if i == j or j in lam_repeat:
                    continue
                lp = lam * pj
                if pi == lp:
                    lam_repeat[i] = (j, lam)
                    break
                if pi == -lp:
                    lam_repeat[i] = (j, -lam)
                    break
    for i, (j, factor) in sorted(lam_repeat.items()):
        repeats.append(Repeat(classes[j][0], classes[i][0], factor))
    kept = [c for i, c in enumerate(classes) if i not in lam_repeat]
    repeats.sort(key=lambda r: r.repeat)
    return ExtrasymmetricReport(
        distinct=tuple(p.canonical_sign() for _, p in kept),
        distinct_quads=tuple(q for q, _ in kept),
        repeats=tuple(repeats),
        zeros=zeros,
    )


class CIIdeal:
    """Complete intersection generated by distinct coordinate variables."""

    __slots__ = ("ring", "generators", "_idx")

    def __init__(self, ring: Ring, generators: Sequence[str]):
        generators = tuple(generators)
        if len(set(generators)) != len(generators):
            raise ValueError("generators must be distinct variables")
        self.ring = ring
        self.generators = generators
        self._idx = [ring.index(v) for v in generators]

    def offending_terms(self, p: Polynomial) -> list[Polynomial]:
        """Terms of ``p`` divisible by no generator."""
        bad = []
        for mono, c in p.terms:
            if not any(mono[i] for i in self._idx):
                bad.append(Polynomial(self.ring, {mono: c}))
        return bad

    def contains(self, p: Polynomial) -> bool:
        return not self.offending_terms(p)

    def __repr__(self):
        return f"CIIdeal({', '.join(self.generators)})"


@dataclass(frozen=True)
class Witness:
    entry: tuple[int, int]
    value: Polynomial
    offending: tuple[Polynomial, ...]

    def __str__(self):
        i, j = self.entry
        bad = ", ".join(map(str, self.offending))
        return f"m{i}{j} = {self.value} (terms outside the ideal: {bad})"


@dataclass(frozen=True)
class FormatCheck:
    passed: bool
    witnesses: tuple[Witness, ...] = ()
    pivot_is_variable: bool | None = None
    entries: tuple[tuple[int, int], ...] = field(default=(), compare=False)


def _check_entries(m: SkewMatrix, entries, J: CIIdeal) -> tuple[Witness, ...]:
    out = []
    for i, j in entries:
        v = m[i, j]
        bad = J.offending_terms(v)
        if bad:
            out.append(Witness((i, j), v, tuple(bad)))
    return tuple(out)


def _validate(m: SkewMatrix, J: CIIdeal, indices: Sequence[int]) -> None:
    if m.size != 5:
        raise SkewMatrixError(f"Tom/Jerry conditions need a 5x5 matrix, got {m.size}x{m.size}")
    # four generators in the codimension 4 setting; more are allowed so that
    # enlarging the ideal can be compared against the original check
    if len(J.generators) < 4:
        raise ValueError("the complete intersection needs at least 4 generators")
    if J.ring != m.ring:
        raise RingError("ideal and matrix live in different rings")
    for k in indices:
        if not 1 <= k <= 5:
            raise SkewMatrixError(f"index {k} out of range")


def tom_check(m: SkewMatrix, i: int, J: CIIdeal) -> FormatCheck:
    """Tom_i: the 6 entries away from row and column ``i`` lie in ``J``."""
    _validate(m, J, [i])
    rest = [k for k in range(1, 6) if k != i]
    entries = tuple((a, b) for n, a in enumerate(rest) for b in rest[n + 1:])
    w = _check_entries(m, entries, J)
    return FormatCheck(not w, w, entries=entries)


def jerry_check(m: SkewMatrix, j: int, k: int, J: CIIdeal) -> FormatCheck:
    """Jerry_jk: the 7 entries in rows/columns ``j`` and ``k`` lie in ``J``.

    ``pivot_is_variable`` reports whether ``m_jk`` is literally one of the
    generators with coefficient 1.
    """
    _validate(m, J, [j, k])
    if j == k:
        raise ValueError("Jerry needs two different indices")
    j, k = min(j, k), max(j, k)
    entries = [(j, k)]
    for r in range(1, 6):
        if r not in (j, k):
            entries.append((min(r, j), max(r, j)))
            entries.append((min(r, k), max(r, k)))
    entries = tuple(sorted(entries))
    w = _check_entries(m, entries, J)
    pivot = m[j, k]
    pivot_is_var = any(pivot == m.ring.var(v) for v in J.generators)
    return FormatCheck(not w, w, pivot_is_var, entries)
