"""Exact weighted multivariate polynomials over the rationals.

A :class:`Ring` fixes an ordered list of variable names and one integer
weight per variable.  :class:`Polynomial` values are immutable and always in
canonical form: no zero coefficients, one entry per monomial, and terms listed
in descending weighted-degrevlex order (weighted degree, then total degree,
then reverse variable index).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

Monomial = tuple  # exponent vector, one int per ring variable
Coefficient = Union[int, Fraction]


class RingError(ValueError):
    """Unknown variable, ring mismatch, or an ill-formed ring declaration."""


class ZeroPolynomialError(ValueError):
    pass


def _coerce_coefficient(c) -> Coefficient:
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _coerce_coefficient(Fraction(c.numerator, c.denominator))
    raise TypeError(f"not an exact rational: {c!r}")


def _normalized(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Ring:
    """Ordered variables with integer weights.

    The variable order is the canonical index used by every monomial order
    and by every tie-break.  Weight 0 is allowed and is meant for parameters.
    """

    __slots__ = ("names", "weights", "_index", "_hash")

    def __init__(self, names: Iterable[str], weights: Iterable[int] | None = None):
        names = tuple(names)
        weights = tuple(1 for _ in names) if weights is None else tuple(int(w) for w in weights)
        if len(weights) != len(names):
            raise RingError(f"{len(names)} variables but {len(weights)} weights")
        for n in names:
            if not n or not isinstance(n, str):
                raise RingError(f"bad variable name {n!r}")
        if len(set(names)) != len(names):
            raise RingError("variable names must be unique")
        if any(w < 0 for w in weights):
            raise RingError("weights must be nonnegative")
        self.names = names
        self.weights = weights
        self._index = {n: i for i, n in enumerate(names)}
        self._hash = hash((names, weights))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise RingError(f"unknown variable {name!r}") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ring)
            and self.names == other.names
            and self.weights == other.weights
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Ring({list(self.names)}, weights={list(self.weights)})"

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c) -> Polynomial:
        c = _coerce_coefficient(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: str) -> Polynomial:
        i = self.index(name)
        mono = tuple(1 if k == i else 0 for k in range(self.nvars))
        return Polynomial(self, {mono: 1})

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(n) for n in self.names)

    def monomial(self, exponents: Mapping[str, int]) -> Polynomial:
        mono = [0] * self.nvars
        for name, e in exponents.items():
            if e < 0:
                raise RingError(f"negative exponent for {name}")
            mono[self.index(name)] = e
        return Polynomial(self, {tuple(mono): 1})

    def degree_key(self, mono: Monomial) -> tuple:
        """Sort key of the storage order; larger key means larger monomial."""
        wdeg = sum(e * w for e, w in zip(mono, self.weights))
        return (wdeg, sum(mono)) + tuple(-e for e in reversed(mono))

    def extend(self, names: Iterable[str], weights: Iterable[int] | None = None,
               front: bool = False) -> Ring:
        """A ring with extra variables, appended (or prepended)."""
        names = tuple(names)
        weights = tuple(1 for _ in names) if weights is None else tuple(weights)
        if front:
            return Ring(names + self.names, weights + self.weights)
        return Ring(self.names + names, self.weights + weights)

    def drop(self, names: Iterable[str]) -> Ring:
        names = set(names)
        kept = [(n, w) for n, w in zip(self.names, self.weights) if n not in names]
        return Ring([n for n, _ in kept], [w for _, w in kept])

    def parse(self, text: str) -> Polynomial:
        """Evaluate one expression in the workspace syntax over this ring."""
        from .dsl import parse_expression

        return parse_expression(text, self)


class Polynomial:
    """Immutable sparse polynomial; coefficients are ``int`` or ``Fraction``."""

    __slots__ = ("ring", "_terms", "_sorted", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Coefficient]):
        # callers inside this module pass already-clean dicts
        self.ring = ring
        self._terms = terms
        self._sorted = None
        self._hash = None

    @classmethod
    def from_terms(cls, ring: Ring, terms: Iterable[tuple[Monomial, object]]) -> Polynomial:
        acc: dict = {}
        for mono, c in terms:
            mono = tuple(int(e) for e in mono)
            if len(mono) != ring.nvars:
                raise RingError("exponent vector has wrong length")
            if any(e < 0 for e in mono):
                raise RingError("negative exponent")
            acc[mono] = acc.get(mono, 0) + _coerce_coefficient(c)
        return cls(ring, {m: _normalized(c) for m, c in acc.items() if c})

    # -- views ---------------------------------------------------------
    @property
    def terms(self) -> tuple[tuple[Monomial, Coefficient], ...]:
        """Terms in descending storage order."""
        if self._sorted is None:
            key = self.ring.degree_key
            self._sorted = tuple(sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True))
        return self._sorted

    def as_dict(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> Coefficient:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self._terms.get((0,) * self.ring.nvars, 0)

    def leading_term(self) -> tuple[Monomial, Coefficient]:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        return self.terms[0]

    def leading_coefficient(self) -> Coefficient:
        return self.leading_term()[1]

    def variables(self) -> tuple[str, ...]:
        used = [False] * self.ring.nvars
        for mono in self._terms:
            for i, e in enumerate(mono):
                if e:
                    used[i] = True
        return tuple(n for n, u in zip(self.ring.names, used) if u)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((m[i] for m in self._terms), default=0)

    def coefficient_of(self, name: str, power: int = 1) -> Polynomial:
        """The polynomial multiplying ``name**power`` (other powers ignored)."""
        i = self.ring.index(name)
        out = {}
        for mono, c in self._terms.items():
            if mono[i] == power:
                out[mono[:i] + (0,) + mono[i + 1:]] = c
        return Polynomial(self.ring, out)

    # -- arithmetic ----------------------------------------------------
    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction, Rational)) and not isinstance(other, bool):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _normalized(s)
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __pos__(self) -> Polynomial:
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out: dict = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple([x + y for x, y in zip(ma, mb)])
                out[m] = out.get(m, 0) + ca * cb
        return Polynomial(self.ring, {m: _normalized(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        # only division by a nonzero rational constant
        if isinstance(other, Polynomial):
            if not other.is_constant():
                raise TypeError("division by a non-constant polynomial")
            other = other.constant_value()
        other = _coerce_coefficient(other)
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return Polynomial(self.ring, {m: _normalized(Fraction(c) / other) for m, c in self._terms.items()})

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or isinstance(k, bool):
            raise TypeError("exponent must be an integer")
        if k < 0:
            raise RingError("negative exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> Polynomial:
        c = _coerce_coefficient(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: _normalized(v * c) for m, v in self._terms.items()})

    # -- comparison ----------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- derived operations -------------------------------------------
    def substitute(self, mapping: Mapping[str, Polynomial] | VarMap) -> Polynomial:
        """Simultaneous substitution of variables; the identity elsewhere."""
        if isinstance(mapping, VarMap):
            return mapping(self)
        return VarMap(self.ring, mapping)(self)

    def weighted_degree(self) -> int | None:
        """Common weighted degree of all terms, or ``None`` if inhomogeneous."""
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        w = self.ring.weights
        degs = {sum(e * x for e, x in zip(m, w)) for m in self._terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.weighted_degree() is not None

    def canonical_sign(self) -> Polynomial:
        if self._terms and self.leading_coefficient() < 0:
            return -self
        return self

    def monic(self) -> Polynomial:
        if not self._terms:
            return self
        lc = self.leading_coefficient()
        return self if lc == 1 else self / lc

    def primitive(self) -> Polynomial:
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if not self._terms:
            return self
        from math import gcd, lcm

        den = 1
        for c in self._terms.values():
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        ints = {m: int(c * den) for m, c in self._terms.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, c)
        p = Polynomial(self.ring, {m: c // g for m, c in ints.items()})
        return p.canonical_sign()

    def to_ring(self, ring: Ring) -> Polynomial:
        """Re-express in another ring by variable name."""
        if ring == self.ring:
            return self
        pos = []
        for i, n in enumerate(self.ring.names):
            pos.append(ring.index(n) if n in ring else None)
        out = {}
        for mono, c in self._terms.items():
            new = [0] * ring.nvars
            for i, e in enumerate(mono):
                if e:
                    if pos[i] is None:
                        raise RingError(f"variable {self.ring.names[i]!r} not in target ring")
                    new[pos[i]] = e
            out[tuple(new)] = c
        return Polynomial(ring, out)

    # -- printing ------------------------------------------------------
    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


def _format_coefficient(c: Coefficient) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_monomial(ring: Ring, mono: Monomial) -> str:
    parts = []
    for name, e in zip(ring.names, mono):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    """Workspace syntax, e.g. ``3/2*a*b - c^2``."""
    if p.is_zero():
        return "0"
    out = []
    for k, (mono, c) in enumerate(p.terms):
        neg = c < 0
        mag = -c if neg else c
        body = format_monomial(p.ring, mono)
        if not body:
            text = _format_coefficient(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{_format_coefficient(mag)}*{body}"
        if k == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out)


class VarMap:
    """Simultaneous substitution ``name -> Polynomial``; identity elsewhere."""

    __slots__ = ("ring", "assignments")

    def __init__(self, ring: Ring, assignments: Mapping[str, Polynomial | object] | None = None):
        self.ring = ring
        clean = {}
        for name, image in (assignments or {}).items():
            ring.index(name)
            if not isinstance(image, Polynomial):
                image = ring.const(image)
            elif image.ring != ring:
                raise RingError(f"image of {name!r} lives in another ring")
            clean[name] = image
        self.assignments = clean

    def image(self, name: str) -> Polynomial:
        img = self.assignments.get(name)
        return self.ring.var(name) if img is None else img

    def __call__(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise RingError("substitution applied to a polynomial of another ring")
        if not self.assignments:
            return p
        idx = [(self.ring.index(n), img) for n, img in self.assignments.items()]
        moving = {i for i, _ in idx}
        images = dict(idx)
        powers: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] ** e
            return powers[key]

        acc: dict = {}
        for mono, c in p._terms.items():
            rest = tuple(0 if i in moving else e for i, e in enumerate(mono))
            term = Polynomial(self.ring, {rest: c})
            for i in moving:
                if mono[i]:
                    term = term * power(i, mono[i])
            for m, v in term._terms.items():
                acc[m] = acc.get(m, 0) + v
        return Polynomial(self.ring, {m: _normalized(v) for m, v in acc.items() if v})

    def compose(self, inner: VarMap) -> VarMap:
        """``self.compose(inner)(p) == self(inner(p))``."""
        if inner.ring != self.ring:
            raise RingError("cannot compose maps over different rings")
        names = set(self.assignments) | set(inner.assignments)
        return VarMap(self.ring, {n: self(inner.image(n)) for n in names})

    def is_identity(self) -> bool:
        return all(img == self.ring.var(n) for n, img in self.assignments.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, VarMap) or other.ring != self.ring:
            return NotImplemented
        names = set(self.assignments) | set(other.assignments)
        return all(self.image(n) == other.image(n) for n in names)

    def __repr__(self) -> str:
        body = ", ".join(f"{n} -> {p}" for n, p in self.assignments.items())
        return f"VarMap({body})"
