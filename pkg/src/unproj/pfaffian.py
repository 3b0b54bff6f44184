"""Skew-symmetric matrices of polynomials and their Pfaffians.

Entries are stored as the strict upper triangle with 1-based indices.  The
Pfaffian follows the first-row expansion

    Pf(M) = sum_{j >= 2} (-1)^j m_{1j} Pf(M with rows/cols 1, j deleted),

so that the 2x2 matrix with ``m12 = a`` has Pfaffian ``a``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping

from .ring import Polynomial, Ring, VarMap


class SkewMatrixError(ValueError):
    pass


class SkewMatrix:
    __slots__ = ("ring", "size", "_upper")

    def __init__(self, ring: Ring, size: int, upper: Mapping[tuple[int, int], object] | None = None):
        if size < 0:
            raise SkewMatrixError("size must be nonnegative")
        self.ring = ring
        self.size = size
        clean = {}
        for (i, j), v in (upper or {}).items():
            if not (1 <= i < j <= size):
                raise SkewMatrixError(f"entry ({i},{j}) is not strictly above the diagonal of a {size}x{size} matrix")
            if not isinstance(v, Polynomial):
                v = ring.const(v)
            elif v.ring != ring:
                raise SkewMatrixError(f"entry ({i},{j}) lives in another ring")
            if v:
                clean[(i, j)] = v
        self._upper = clean

    @classmethod
    def from_rows(cls, ring: Ring, rows: list[list]) -> SkewMatrix:
        """Build from upper-triangle rows as printed: row i lists m_{i,i+1..n}."""
        n = len(rows) + 1
        upper = {}
        for i, row in enumerate(rows, start=1):
            if len(row) != n - i:
                raise SkewMatrixError(f"row {i} should have {n - i} entries")
            for j, v in enumerate(row, start=i + 1):
                upper[(i, j)] = v
        return cls(ring, n, upper)

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise SkewMatrixError(f"index ({i},{j}) out of range for size {self.size}")
        if i == j:
            return self.ring.zero()
        if i < j:
            return self._upper.get((i, j), self.ring.zero())
        return -self._upper.get((j, i), self.ring.zero())

    def upper(self) -> dict[tuple[int, int], Polynomial]:
        """Nonzero upper entries in row-major order."""
        return {k: self._upper[k] for k in sorted(self._upper)}

    def rows(self) -> list[list[Polynomial]]:
        n = self.size
        return [[self[i, j] for j in range(1, n + 1)] for i in range(1, n + 1)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        return self.ring == other.ring and self.size == other.size and self._upper == other._upper

    def __hash__(self):
        return hash((self.ring, self.size, frozenset(self._upper.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j})={p}" for (i, j), p in self.upper().items())
        return f"SkewMatrix({self.size}: {body})"

    def substitute(self, m: VarMap | Mapping[str, Polynomial]) -> SkewMatrix:
        if not isinstance(m, VarMap):
            m = VarMap(self.ring, m)
        return SkewMatrix(self.ring, self.size, {k: m(v) for k, v in self._upper.items()})

    def delete(self, rows: Iterable[int]) -> SkewMatrix:
        return delete(self, rows)

    def principal(self, keep: Iterable[int]) -> SkewMatrix:
        """Principal submatrix on the listed indices, in the order given."""
        keep = list(keep)
        for k in keep:
            if not 1 <= k <= self.size:
                raise SkewMatrixError(f"index {k} out of range for size {self.size}")
        if len(set(keep)) != len(keep):
            raise SkewMatrixError("repeated index")
        upper = {}
        for a, i in enumerate(keep, start=1):
            for b, j in enumerate(keep[a:], start=a + 1):
                upper[(a, b)] = self[i, j]
        return SkewMatrix(self.ring, len(keep), upper)

    def add_multiple(self, target: int, source: int, factor) -> SkewMatrix:
        """Congruence: row and column ``target`` += factor * row/col ``source``.

        The result is P^T M P for an elementary P, so the ideal of
        Pfaffians of any fixed size is unchanged.
        """
        if target == source:
            raise SkewMatrixError("target and source must differ")
        if not isinstance(factor, Polynomial):
            factor = self.ring.const(factor)
        n = self.size
        new = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                v = self[i, j]
                if i == target:
                    v = v + factor * self[source, j]
                if j == target:
                    v = v + factor * self[i, source]
                new[(i, j)] = v
        return SkewMatrix(self.ring, n, new)

    def pfaffian(self) -> Polynomial:
        return pfaffian(self)

    def maximal_pfaffians(self) -> list[tuple[int, Polynomial]]:
        return maximal_pfaffians(self)


def delete(m: SkewMatrix, rows: Iterable[int]) -> SkewMatrix:
    """Principal submatrix on the complement of ``rows``, order preserved."""
    rows = set(rows)
    for r in rows:
        if not 1 <= r <= m.size:
            raise SkewMatrixError(f"index {r} out of range for size {m.size}")
    return m.principal(k for k in range(1, m.size + 1) if k not in rows)


def pfaffian(m: SkewMatrix) -> Polynomial:
    if m.size % 2:
        raise SkewMatrixError(f"Pfaffian of odd size {m.size}")
    cache: dict[tuple[int, ...], Polynomial] = {}

    def pf(idx: tuple[int, ...]) -> Polynomial:
        if not idx:
            return m.ring.one()
        hit = cache.get(idx)
        if hit is not None:
            return hit
        first, rest = idx[0], idx[1:]
        total = m.ring.zero()
        for pos, j in enumerate(rest):
            entry = m[first, j]
            if entry.is_zero():
                continue
            minor = pf(rest[:pos] + rest[pos + 1:])
            term = entry * minor
            total = total + term if pos % 2 == 0 else total - term
        cache[idx] = total
        return total

    return pf(tuple(range(1, m.size + 1)))


def maximal_pfaffians(m: SkewMatrix) -> list[tuple[int, Polynomial]]:
    """``(i, Pf(M without row/col i))`` for each i; no sign twist."""
    if m.size % 2 == 0:
        raise SkewMatrixError(f"maximal Pfaffians need odd size, got {m.size}")
    return [(i, pfaffian(delete(m, {i}))) for i in range(1, m.size + 1)]


def sub_pfaffians(m: SkewMatrix, k: int) -> list[tuple[tuple[int, ...], Polynomial]]:
    """All k x k principal Pfaffians, quadruples in lexicographic order."""
    if k % 2:
        raise SkewMatrixError("sub-Pfaffian size must be even")
    return [(q, pfaffian(m.principal(q))) for q in combinations(range(1, m.size + 1), k)]


def sub_pfaffians_4of6(m: SkewMatrix) -> list[tuple[tuple[int, ...], Polynomial]]:
    if m.size != 6:
        raise SkewMatrixError(f"expected a 6x6 matrix, got {m.size}x{m.size}")
    return sub_pfaffians(m, 4)
