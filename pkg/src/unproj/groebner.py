"""Monomial orders, Buchberger's algorithm and the ideal oracles built on it.

The engine works on plain ``{exponent tuple: coefficient}`` dicts and keeps
basis elements monic.  Pair selection is the normal strategy (smallest lcm
first) with the Gebauer-Moeller installation of Buchberger's coprime and
chain criteria.  Results are reduced bases, hence canonical for a given
ideal and order.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .ring import Polynomial, Ring, RingError

Mono = tuple


# -- monomial orders --------------------------------------------------------

ORDER_KINDS = ("degrevlex", "lex", "wdegrevlex", "block")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order; ``block`` compares the ``eliminate`` variables first.

    ``wdegrevlex`` compares weighted degree, then total degree (this keeps it
    a well-order when parameters have weight 0), then reverse lex with ties
    broken by the last variable.  Each block of a block order is compared the
    same way.
    """

    kind: str = "wdegrevlex"
    eliminate: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and not self.eliminate:
            raise ValueError("block order needs a nonempty eliminate group")
        if self.kind != "block" and self.eliminate:
            raise ValueError("only block orders take an eliminate group")

    @classmethod
    def block(cls, eliminate: Iterable[str]) -> MonomialOrder:
        return cls("block", tuple(eliminate))

    def key_function(self, ring: Ring) -> Callable[[Mono], tuple]:
        """Map exponent vectors to tuples; larger tuple = larger monomial."""
        return _key_function(self, ring)

    def __str__(self) -> str:
        if self.kind == "block":
            return "elim:" + ",".join(self.eliminate)
        return self.kind


DEFAULT_ORDER = MonomialOrder()


def _revlex_block(indices: list[int], weights: Sequence[int] | None):
    rev = list(reversed(indices))

    def part(m):
        deg = 0
        for i in indices:
            deg += m[i]
        head = (deg,)
        if weights is not None:
            head = (sum(m[i] * weights[i] for i in indices), deg)
        return head + tuple(-m[i] for i in rev)

    return part


_KEY_CACHE: dict = {}


def _key_function(order: MonomialOrder, ring: Ring):
    cached = _KEY_CACHE.get((order, ring))
    if cached is not None:
        return cached
    n = ring.nvars
    if order.kind == "lex":
        def key(m):
            return m
    elif order.kind == "degrevlex":
        key = _revlex_block(list(range(n)), None)
    elif order.kind == "wdegrevlex":
        key = _revlex_block(list(range(n)), ring.weights)
    else:
        elim = [ring.index(v) for v in order.eliminate]
        if len(set(elim)) != len(elim):
            raise ValueError("repeated variable in eliminate group")
        first = sorted(elim)
        rest = [i for i in range(n) if i not in set(elim)]
        k1 = _revlex_block(first, ring.weights)
        k2 = _revlex_block(rest, ring.weights) if rest else (lambda m: ())

        def key(m):
            return k1(m) + k2(m)
    _KEY_CACHE[(order, ring)] = key
    return key


def parse_order(text: str) -> MonomialOrder:
    """``degrevlex``, ``lex``, ``wdegrevlex`` or ``elim:v1,v2,...``."""
    if text.startswith("elim:"):
        names = tuple(v for v in text[5:].split(",") if v)
        return MonomialOrder.block(names)
    return MonomialOrder(text)


# -- ideals and bases ---------------------------------------------------------

class Ideal:
    """Generators over one ring; zero generators are dropped."""

    __slots__ = ("ring", "generators")

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingError("generator lives in another ring")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"

    def __add__(self, other: Ideal) -> Ideal:
        return Ideal(self.ring, self.generators + tuple(other))


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    order: MonomialOrder
    basis: tuple[Polynomial, ...]

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def leading_monomials(self) -> list[Mono]:
        key = self.order.key_function(self.ring)
        return [max(g.as_dict(), key=key) for g in self.basis]

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()


class _Elem:
    """Monic basis element: leading monomial, its mask and the tail terms."""

    __slots__ = ("lm", "mask", "tail", "deg")

    def __init__(self, lm, tail):
        self.lm = lm
        self.mask = _mask(lm)
        self.tail = tail
        self.deg = sum(lm)


def _mask(m: Mono) -> int:
    bits = 0
    for i, e in enumerate(m):
        if e:
            bits |= 1 << i
    return bits


def _divides(a: Mono, b: Mono) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: Mono, b: Mono) -> Mono:
    return tuple([x if x > y else y for x, y in zip(a, b)])


def _coprime(a: Mono, b: Mono) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class _Engine:
    def __init__(self, ring: Ring, order: MonomialOrder):
        self.ring = ring
        self.order = order
        self.key = order.key_function(ring)
        self.cache: dict = {}

    def negkey(self, m):
        k = self.cache.get(m)
        if k is None:
            k = tuple([-x for x in self.key(m)])
            self.cache[m] = k
        return k

    def leading(self, f: dict):
        key = self.key
        return max(f, key=key)

    def make_elem(self, f: dict) -> _Elem:
        lm = self.leading(f)
        lc = f[lm]
        tail = []
        for m, c in f.items():
            if m != lm:
                tail.append((m, c if lc == 1 else _norm(Fraction(c) / lc)))
        return _Elem(lm, tail)

    def reduce(self, f: dict, basis: list[_Elem], top_only: bool = False) -> dict:
        """Full remainder of ``f`` on division by monic ``basis``."""
        f = dict(f)
        heap = [(self.negkey(m), m) for m in f]
        heapq.heapify(heap)
        rem = {}
        negkey = self.negkey
        push = heapq.heappush
        pop = heapq.heappop
        while heap:
            _, m = pop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            mmask = _mask(m)
            s = sum(m)
            for g in basis:
                if g.deg <= s and not (g.mask & ~mmask) and _divides(g.lm, m):
                    q = tuple([x - y for x, y in zip(m, g.lm)])
                    for gm, gc in g.tail:
                        nm = tuple([x + y for x, y in zip(gm, q)])
                        old = f.get(nm)
                        if old is None:
                            f[nm] = -c * gc
                            push(heap, (negkey(nm), nm))
                        else:
                            v = old - c * gc
                            if v:
                                f[nm] = v
                            else:
                                del f[nm]
                    break
            else:
                rem[m] = c
                if top_only:
                    rem.update(f)
                    return {k: _norm(v) for k, v in rem.items()}
        return {k: _norm(v) for k, v in rem.items()}

    def spoly(self, g: _Elem, h: _Elem) -> dict:
        l = _lcm(g.lm, h.lm)
        qg = tuple([x - y for x, y in zip(l, g.lm)])
        qh = tuple([x - y for x, y in zip(l, h.lm)])
        out: dict = {}
        for m, c in g.tail:
            nm = tuple([x + y for x, y in zip(m, qg)])
            out[nm] = out.get(nm, 0) + c
        for m, c in h.tail:
            nm = tuple([x + y for x, y in zip(m, qh)])
            out[nm] = out.get(nm, 0) - c
        return {m: c for m, c in out.items() if c}

    def run(self, gens: list[dict], seed: int | None = None) -> list[_Elem]:
        rng = random.Random(seed) if seed is not None else None
        gens = [g for g in gens if g]
        if rng is not None:
            rng.shuffle(gens)
        elems: list[_Elem] = []
        active: list[int] = []
        pairs: list = []  # heap of (lcm key, tiebreak, i, j)
        counter = [0]

        def tiebreak():
            counter[0] += 1
            return rng.random() if rng is not None else counter[0]

        def install(f: dict):
            h = self.make_elem(f)
            hi = len(elems)
            elems.append(h)
            if not h.tail and not any(h.lm):
                # the unit ideal
                active.clear()
                active.append(hi)
                pairs.clear()
                return True
            # Gebauer-Moeller update
            cand = [(gi, _lcm(elems[gi].lm, h.lm)) for gi in active]
            kept = []
            for k, (gi, l) in enumerate(cand):
                if _coprime(elems[gi].lm, h.lm):
                    kept.append((gi, l, True))
                    continue
                redundant = False
                for k2, (gj, l2) in enumerate(cand):
                    if k2 != k and _divides(l2, l) and (l2 != l or k2 < k):
                        redundant = True
                        break
                if not redundant:
                    kept.append((gi, l, False))
            newpairs = [(gi, l) for gi, l, cop in kept if not cop]
            # drop old pairs whose lcm is strictly divisible through h
            survivors = []
            for entry in pairs:
                _, _, i, j, l = entry
                if (
                    _divides(h.lm, l)
                    and _lcm(elems[i].lm, h.lm) != l
                    and _lcm(elems[j].lm, h.lm) != l
                ):
                    continue
                survivors.append(entry)
            pairs[:] = survivors
            for gi, l in newpairs:
                pairs.append((self.key(l), tiebreak(), gi, hi, l))
            heapq.heapify(pairs)
            active[:] = [gi for gi in active if not _divides(h.lm, elems[gi].lm)] + [hi]
            return False

        for f in gens:
            r = self.reduce(f, [elems[i] for i in active])
            if r and install(r):
                return [elems[active[0]]]
        while pairs:
            _, _, i, j, _ = heapq.heappop(pairs)
            s = self.spoly(elems[i], elems[j])
            if not s:
                continue
            r = self.reduce(s, [elems[k] for k in active])
            if r and install(r):
                return [elems[active[0]]]
        return [elems[i] for i in active]

    def reduced(self, elems: list[_Elem]) -> list[dict]:
        # minimalize
        elems = sorted(elems, key=lambda e: self.key(e.lm))
        minimal: list[_Elem] = []
        for e in elems:
            if not any(_divides(g.lm, e.lm) for g in minimal):
                minimal.append(e)
        out = []
        for k, e in enumerate(minimal):
            others = minimal[:k] + minimal[k + 1:]
            tail = self.reduce(dict(e.tail), others)
            tail[e.lm] = 1
            out.append(tail)
        return out


def _engine_run(ring: Ring, order: MonomialOrder, gens: Sequence[Polynomial], seed=None) -> GroebnerBasis:
    eng = _Engine(ring, order)
    elems = eng.run([g.as_dict() for g in gens], seed=seed)
    basis = [Polynomial(ring, d) for d in eng.reduced(elems)]
    key = eng.key
    basis.sort(key=lambda p: key(max(p.as_dict(), key=key)))
    return GroebnerBasis(ring, order, tuple(basis))


_GB_CACHE: dict = {}


def buchberger(ideal: Ideal | Sequence[Polynomial], order: MonomialOrder | None = None,
               seed: int | None = None, ring: Ring | None = None) -> GroebnerBasis:
    """Reduced Groebner basis; ``seed`` shuffles generator and pair order."""
    if not isinstance(ideal, Ideal):
        gens = list(ideal)
        if ring is None:
            if not gens:
                raise ValueError("ring needed for an empty generator list")
            ring = gens[0].ring
        ideal = Ideal(ring, gens)
    order = order or DEFAULT_ORDER
    if seed is not None:
        return _engine_run(ideal.ring, order, ideal.generators, seed)
    ck = (ideal.ring, order, frozenset(g.monic() for g in ideal.generators))
    hit = _GB_CACHE.get(ck)
    if hit is None:
        hit = _engine_run(ideal.ring, order, ideal.generators)
        _GB_CACHE[ck] = hit
    return hit


def clear_cache() -> None:
    _GB_CACHE.clear()


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    if p.ring != G.ring:
        raise RingError("polynomial and basis live in different rings")
    eng = _Engine(G.ring, G.order)
    elems = [eng.make_elem(g.as_dict()) for g in G.basis]
    return Polynomial(G.ring, eng.reduce(p.as_dict(), elems))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    eng = _Engine(f.ring, order or DEFAULT_ORDER)
    return Polynomial(f.ring, eng.spoly(eng.make_elem(f.as_dict()), eng.make_elem(g.as_dict())))


def is_groebner(G: GroebnerBasis) -> bool:
    """Post-hoc check: every S-polynomial reduces to zero."""
    eng = _Engine(G.ring, G.order)
    elems = [eng.make_elem(g.as_dict()) for g in G.basis]
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            s = eng.spoly(elems[i], elems[j])
            if s and eng.reduce(s, elems):
                return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    eng = _Engine(G.ring, G.order)
    lms = [eng.leading(g.as_dict()) for g in G.basis]
    for k, g in enumerate(G.basis):
        if g.as_dict()[lms[k]] != 1:
            return False
        for m in g.as_dict():
            for j, lm in enumerate(lms):
                if j != k and _divides(lm, m):
                    return False
    return True


def is_member(p: Polynomial, ideal: Ideal | Sequence[Polynomial]) -> bool:
    if not isinstance(ideal, Ideal):
        ideal = Ideal(p.ring, ideal)
    if p.is_zero():
        return True
    return normal_form(p, buchberger(ideal)).is_zero()


def ideals_equal(I: Ideal | Sequence[Polynomial], J: Ideal | Sequence[Polynomial],
                 order: MonomialOrder | None = None) -> bool:
    I = I if isinstance(I, Ideal) else Ideal(_ring_of(I, J), I)
    J = J if isinstance(J, Ideal) else Ideal(I.ring, J)
    if I.ring != J.ring:
        raise RingError("ideals live in different rings")
    return buchberger(I, order).basis == buchberger(J, order).basis


def _ring_of(*seqs) -> Ring:
    for s in seqs:
        if isinstance(s, Ideal):
            return s.ring
        for p in s:
            return p.ring
    raise ValueError("cannot infer the ring of empty generator lists")


def eliminate(ideal: Ideal, drop: Iterable[str]) -> Ideal:
    """Generators of the ideal intersected with the subring without ``drop``.

    The result lives in the smaller ring and is a Groebner basis of the
    elimination ideal under the induced order.
    """
    drop = set(drop)
    missing = drop - set(ideal.ring.names)
    if missing:
        raise RingError(f"unknown variables {sorted(missing)}")
    drop = tuple(v for v in ideal.ring.names if v in drop)
    sub = ideal.ring.drop(drop)
    if not drop:
        return Ideal(ideal.ring, buchberger(ideal).basis)
    G = buchberger(ideal, MonomialOrder.block(drop))
    kept = [g for g in G.basis if not set(g.variables()) & set(drop)]
    return Ideal(sub, [g.to_ring(sub) for g in kept])


def saturate(ideal: Ideal, h: Polynomial, tag: str = "T_sat") -> Ideal:
    """``I : h^infinity`` via elimination of ``T`` from ``I + (1 - T h)``."""
    while tag in ideal.ring:
        tag += "_"
    big = ideal.ring.extend([tag], [0])
    T = big.var(tag)
    gens = [g.to_ring(big) for g in ideal.generators] + [big.one() - T * h.to_ring(big)]
    return Ideal(ideal.ring, [g.to_ring(ideal.ring) for g in eliminate(Ideal(big, gens), [tag])])
