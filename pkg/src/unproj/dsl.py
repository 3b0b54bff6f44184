"""Workspace text format (``.usr`` files).

A workspace is a sequence of ``;``-terminated statements::

    # comments run to the end of the line
    ring a b c x : weights 6 6 6 6;
    poly P = a*c - b^2;
    ideal I = a*c - b^2, x*b - c^2;
    skew 5 M = (1,3) = c, (2,3) = x;
    varmap T = a -> x, x -> a;

Expressions use ``+ - * ^``, parentheses, integers and rational literals
``3/2``.  ``^`` binds tighter than unary minus, which binds tighter than
``*``.  There is no implicit multiplication.  Inside an expression a name is
a ring variable or a previously declared ``poly``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .pfaffian import SkewMatrix, SkewMatrixError
from .ring import Polynomial, Ring, RingError, VarMap, format_polynomial

KEYWORDS = {"ring", "poly", "ideal", "skew", "varmap", "weights"}


class DslError(ValueError):
    """A positioned parse or evaluation error."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, INT, SYM, EOF
    text: str
    offset: int
    line: int
    col: int


_TOKEN_RE = re.compile(r"\s+|#[^\n]*|(?P<NAME>[A-Za-z_][A-Za-z0-9_]*)|(?P<INT>\d+)|(?P<SYM>->|[-+*/^(),;=:])")


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise DslError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind is not None:
            tokens.append(Token(kind, m.group(), pos, line, col))
        chunk = m.group()
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    col = pos - line_start + 1
    tokens.append(Token("EOF", "", pos, line, col))
    return tokens


@dataclass
class Workspace:
    """Named polynomials, ideals, skew matrices and variable maps over one ring."""

    ring: Ring
    polys: dict[str, Polynomial] = field(default_factory=dict)
    ideals: dict[str, tuple[Polynomial, ...]] = field(default_factory=dict)
    matrices: dict[str, SkewMatrix] = field(default_factory=dict)
    varmaps: dict[str, VarMap] = field(default_factory=dict)
    order: list[tuple[str, str]] = field(default_factory=list)
    # source text of each poly and of each ideal generator, for sign-level edits
    sources: dict[tuple[str, str], object] = field(default_factory=dict, compare=False, repr=False)
    # (kind, name) -> offsets (start, end) of every expression of that statement
    spans: dict[tuple[str, str], list] = field(default_factory=dict, compare=False, repr=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Workspace):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.polys == other.polys
            and self.ideals == other.ideals
            and self.matrices == other.matrices
            and self.varmaps == other.varmaps
            and self.order == other.order
        )

    def poly(self, name: str) -> Polynomial:
        return self.polys[name]

    def ideal(self, name: str) -> tuple[Polynomial, ...]:
        return self.ideals[name]

    def matrix(self, name: str) -> SkewMatrix:
        return self.matrices[name]

    def varmap(self, name: str) -> VarMap:
        return self.varmaps[name]

    def source(self, kind: str, name: str):
        return self.sources[(kind, name)]


class _Parser:
    def __init__(self, text: str, ring: Ring | None = None, polys: dict | None = None):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.ring = ring
        self.polys = dict(polys or {})
        self.spans: list[tuple[int, int]] = []

    # -- token helpers --------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None) -> DslError:
        tok = tok or self.tok
        return DslError(message, tok.line, tok.col)

    def advance(self) -> Token:
        t = self.tokens[self.i]
        if t.kind != "EOF":
            self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind == "SYM" and self.tok.text == text

    def expect_sym(self, text: str) -> Token:
        if not self.at(text):
            shown = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {shown!r}")
        return self.advance()

    def expect_name(self, what: str = "a name") -> Token:
        if self.tok.kind != "NAME" or self.tok.text in KEYWORDS:
            shown = self.tok.text or "end of input"
            raise self.error(f"expected {what}, found {shown!r}")
        return self.advance()

    def expect_int(self) -> Token:
        if self.tok.kind != "INT":
            shown = self.tok.text or "end of input"
            raise self.error(f"expected an integer, found {shown!r}")
        return self.advance()

    # -- expressions ----------------------------------------------------
    def expression(self) -> tuple[Polynomial, str]:
        if self.ring is None:
            raise self.error("expression before ring declaration")
        start = self.tok.offset
        value = self.sum()
        end = self.tokens[self.i - 1].offset + len(self.tokens[self.i - 1].text)
        self.spans.append((start, end))
        return value, self.text[start:end]

    def sum(self) -> Polynomial:
        value = self.product()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            rhs = self.product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def product(self) -> Polynomial:
        value = self.unary()
        while self.at("*"):
            self.advance()
            value = value * self.unary()
        return value

    def unary(self) -> Polynomial:
        if self.at("-"):
            self.advance()
            return -self.unary()
        if self.at("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.at("^"):
            self.advance()
            if self.at("-"):
                raise self.error("negative exponent")
            exp = int(self.expect_int().text)
            base = base ** exp
        return base

    def atom(self) -> Polynomial:
        tok = self.tok
        if tok.kind == "INT":
            self.advance()
            value = Fraction(int(tok.text))
            if self.at("/"):
                self.advance()
                den = self.expect_int()
                if int(den.text) == 0:
                    raise self.error("zero denominator", den)
                value = value / int(den.text)
            return self.ring.const(value)
        if tok.kind == "NAME" and tok.text not in KEYWORDS:
            self.advance()
            if tok.text in self.ring:
                return self.ring.var(tok.text)
            if tok.text in self.polys:
                return self.polys[tok.text]
            raise self.error(f"undeclared variable {tok.text!r}", tok)
        if self.at("("):
            self.advance()
            value = self.sum()
            self.expect_sym(")")
            return value
        if tok.kind == "EOF" and self.i > 0:
            prev = self.tokens[self.i - 1]
            raise self.error(f"expected an operand after {prev.text!r}, found end of input", prev)
        raise self.error(f"expected an operand, found {tok.text!r}")

    # -- statements -----------------------------------------------------
    def workspace(self) -> Workspace:
        ws = None
        while self.tok.kind != "EOF":
            tok = self.tok
            if tok.kind != "NAME" or tok.text not in KEYWORDS - {"weights"}:
                raise self.error(f"expected a statement keyword, found {tok.text!r}")
            if tok.text == "ring":
                if ws is not None:
                    raise self.error("ring declared twice")
                self.ring = self.ring_stmt()
                ws = Workspace(self.ring)
                continue
            if ws is None:
                raise self.error("the first statement must declare the ring")
            getattr(self, f"{tok.text}_stmt")(ws)
        if ws is None:
            raise self.error("empty workspace: no ring declared")
        return ws

    def ring_stmt(self) -> Ring:
        kw = self.advance()
        names = []
        while self.tok.kind == "NAME" and self.tok.text not in KEYWORDS:
            t = self.advance()
            if t.text in names:
                raise self.error(f"duplicate variable {t.text!r}", t)
            names.append(t.text)
        if not names:
            raise self.error("ring needs at least one variable")
        weights = None
        if self.at(":"):
            self.advance()
            if not (self.tok.kind == "NAME" and self.tok.text == "weights"):
                raise self.error("expected 'weights'")
            self.advance()
            wtok = self.tok
            weights = []
            while self.tok.kind == "INT":
                weights.append(int(self.advance().text))
            if len(weights) != len(names):
                raise self.error(f"arity mismatch: {len(names)} variables but {len(weights)} weights", wtok)
        self.expect_sym(";")
        try:
            return Ring(names, weights)
        except RingError as exc:
            raise self.error(str(exc), kw) from None

    def _declare(self, ws: Workspace, kind: str, name_tok: Token, table: dict) -> None:
        name = name_tok.text
        if name in table:
            raise self.error(f"duplicate {kind} name {name!r}", name_tok)
        if kind == "poly" and name in ws.ring:
            raise self.error(f"poly name {name!r} shadows a ring variable", name_tok)
        ws.order.append((kind, name))
        self.spans = ws.spans.setdefault((kind, name), [])

    def poly_stmt(self, ws: Workspace) -> None:
        self.advance()
        name = self.expect_name("a poly name")
        self._declare(ws, "poly", name, ws.polys)
        self.expect_sym("=")
        value, src = self.expression()
        self.expect_sym(";")
        ws.polys[name.text] = value
        ws.sources[("poly", name.text)] = src
        self.polys[name.text] = value

    def ideal_stmt(self, ws: Workspace) -> None:
        self.advance()
        name = self.expect_name("an ideal name")
        self._declare(ws, "ideal", name, ws.ideals)
        self.expect_sym("=")
        gens, srcs = [], []
        if not self.at(";"):
            while True:
                value, src = self.expression()
                gens.append(value)
                srcs.append(src)
                if not self.at(","):
                    break
                self.advance()
        self.expect_sym(";")
        ws.ideals[name.text] = tuple(gens)
        ws.sources[("ideal", name.text)] = tuple(srcs)

    def skew_stmt(self, ws: Workspace) -> None:
        self.advance()
        size_tok = self.expect_int()
        size = int(size_tok.text)
        if size < 1:
            raise self.error("matrix size must be at least 1", size_tok)
        name = self.expect_name("a matrix name")
        self._declare(ws, "skew", name, ws.matrices)
        self.expect_sym("=")
        upper = {}
        if not self.at(";"):
            while True:
                open_tok = self.expect_sym("(")
                i = int(self.expect_int().text)
                self.expect_sym(",")
                j = int(self.expect_int().text)
                self.expect_sym(")")
                if not (1 <= i < j <= size):
                    raise self.error(
                        f"malformed matrix: entry ({i},{j}) must satisfy 1 <= i < j <= {size}", open_tok
                    )
                if (i, j) in upper:
                    raise self.error(f"malformed matrix: entry ({i},{j}) given twice", open_tok)
                self.expect_sym("=")
                upper[(i, j)], _ = self.expression()
                if not self.at(","):
                    break
                self.advance()
        self.expect_sym(";")
        try:
            ws.matrices[name.text] = SkewMatrix(ws.ring, size, upper)
        except SkewMatrixError as exc:
            raise self.error(str(exc), name) from None

    def varmap_stmt(self, ws: Workspace) -> None:
        self.advance()
        name = self.expect_name("a varmap name")
        self._declare(ws, "varmap", name, ws.varmaps)
        self.expect_sym("=")
        assignments = {}
        if not self.at(";"):
            while True:
                var = self.expect_name("a variable")
                if var.text not in ws.ring:
                    raise self.error(f"undeclared variable {var.text!r}", var)
                if var.text in assignments:
                    raise self.error(f"variable {var.text!r} mapped twice", var)
                self.expect_sym("->")
                assignments[var.text], _ = self.expression()
                if not self.at(","):
                    break
                self.advance()
        self.expect_sym(";")
        ws.varmaps[name.text] = VarMap(ws.ring, assignments)


def parse(text: str) -> Workspace:
    """Parse a whole workspace document."""
    return _Parser(text).workspace()


def parse_expression(text: str, ring: Ring, polys: dict | None = None) -> Polynomial:
    p = _Parser(text, ring, polys)
    value, _ = p.expression()
    if p.tok.kind != "EOF":
        raise p.error(f"unexpected {p.tok.text!r} after expression")
    return value


def serialize(ws: Workspace) -> str:
    """Canonical text; entries in declaration order, polynomials expanded."""
    lines = [
        "ring " + " ".join(ws.ring.names) + " : weights " + " ".join(map(str, ws.ring.weights)) + ";"
    ]
    for kind, name in ws.order:
        if kind == "poly":
            lines.append(f"poly {name} = {format_polynomial(ws.polys[name])};")
        elif kind == "ideal":
            gens = ws.ideals[name]
            if gens:
                body = ",\n  ".join(format_polynomial(g) for g in gens)
                lines.append(f"ideal {name} =\n  {body};")
            else:
                lines.append(f"ideal {name} = ;")
        elif kind == "skew":
            m = ws.matrices[name]
            entries = [f"({i},{j}) = {format_polynomial(v)}" for (i, j), v in m.upper().items()]
            if entries:
                lines.append(f"skew {m.size} {name} =\n  " + ",\n  ".join(entries) + ";")
            else:
                lines.append(f"skew {m.size} {name} = ;")
        elif kind == "varmap":
            vm = ws.varmaps[name]
            body = ", ".join(f"{v} -> {format_polynomial(p)}" for v, p in vm.assignments.items())
            lines.append(f"varmap {name} = {body};" if body else f"varmap {name} = ;")
    return "\n".join(lines) + "\n"


# -- sign-level edits -----------------------------------------------------

def sign_sites(expr: str) -> list[int]:
    """Offsets where a sign can be flipped in an expression.

    Explicit ``+``/``-`` tokens, plus the implicit ``+`` in front of the
    first operand of the expression and of every parenthesised group.
    """
    sites = []
    prev = None
    for t in tokenize(expr):
        if t.kind == "EOF":
            break
        if t.kind == "SYM" and t.text in ("+", "-"):
            sites.append(t.offset)
        elif (t.kind in ("NAME", "INT") or t.text == "(") and (prev is None or prev.text == "("):
            sites.append(t.offset)
        prev = t
    return sites


def workspace_sign_sites(text: str, kind: str | None = None, name: str | None = None) -> list[int]:
    """Sign sites of a workspace document as absolute offsets.

    Restricted to the statements matching ``kind`` and ``name`` when given.
    """
    ws = parse(text)
    sites = []
    for (k, n), spans in ws.spans.items():
        if (kind is None or k == kind) and (name is None or n == name):
            for start, end in spans:
                sites.extend(start + s for s in sign_sites(text[start:end]))
    return sorted(sites)


def flip_sign(expr: str, site: int) -> str:
    ch = expr[site]
    if ch == "+":
        return expr[:site] + "-" + expr[site + 1:]
    if ch == "-":
        return expr[:site] + "+" + expr[site + 1:]
    return expr[:site] + "-" + expr[site:]


def sign_flips(expr: str) -> Iterator[tuple[int, str]]:
    for site in sign_sites(expr):
        yield site, flip_sign(expr, site)
