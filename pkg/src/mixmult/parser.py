"""Text grammar for rings, polynomials, ideals and polytopes.

Polynomials::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | IDENT | '(' expr ')'

``NUMBER`` is an integer or an ``a/b`` rational literal. There is no implicit
multiplication, so ``xy`` is the single identifier ``xy``.

Session files are ``;``-terminated declarations, ``#`` comments::

    ring R = QQ[x,y,z];              # optional: order lex | grevlex
    ideal I = x^4 + y^2*z^2, x*y^2*z;  # uses the most recent ring
    ideal J in R = y^3 + z^3;
    poly f in R = x^2*y + z^3;
    polytope Q = (1,1,0) (2,1,0) (1,3,0) (1,1,3);
"""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import MixMultError, ParseError, PreconditionError
from .field import GF, QQ, Field
from .polynomial import Polynomial
from .ring import DEGREE_LIMIT, GradedRing, MonomialOrder


def _structured_errors(func):
    """Turn stray low-level failures into ``ParseError`` so parsing is total."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except MixMultError:
            raise
        except (ValueError, OverflowError, ZeroDivisionError, RecursionError) as exc:
            raise ParseError(str(exc) or type(exc).__name__) from None
    return wrapper

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<number>\d+(?:/\d+)?)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[-+*^(),;=\[\]])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str  # number | ident | op | eof
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    line, line_start = 1, 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Stream:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def accept(self, text: str) -> bool:
        tok = self.peek
        if tok.kind in ("op", "ident") and tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        tok = self.peek
        if tok.text != text or tok.kind == "eof":
            self.fail(f"expected {text!r}")
        return self.next()

    def expect_kind(self, kind: str, what: str) -> Token:
        tok = self.peek
        if tok.kind != kind:
            self.fail(f"expected {what}")
        return self.next()

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"{message}, found {found}", tok.line, tok.column)


def _literal(tok: Token, ring: GradedRing, stream: _Stream):
    num, _, den = tok.text.partition("/")
    value = Fraction(int(num), int(den)) if den else Fraction(int(num))
    if den and int(den) == 0:
        stream.fail("division by zero in literal", tok)
    try:
        return ring.constant(value)
    except ZeroDivisionError:
        stream.fail(f"literal not defined over {ring.field}", tok)


class _PolyParser:
    def __init__(self, stream: _Stream, ring: GradedRing):
        self.s = stream
        self.ring = ring

    def expr(self) -> Polynomial:
        acc = self.term()
        while True:
            if self.s.accept("+"):
                acc = acc + self.term()
            elif self.s.accept("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.unary()
        while self.s.accept("*"):
            acc = acc * self.unary()
        return acc

    def unary(self) -> Polynomial:
        if self.s.accept("-"):
            return -self.unary()
        if self.s.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.s.accept("^"):
            tok = self.s.peek
            if tok.kind != "number" or "/" in tok.text:
                self.s.fail("exponent must be a non-negative integer literal")
            self.s.next()
            e = int(tok.text)
            if e >= DEGREE_LIMIT or base.total_degree() * e >= DEGREE_LIMIT:
                raise ParseError("exponent literal overflow", tok.line, tok.column)
            return base ** e
        return base

    def atom(self) -> Polynomial:
        tok = self.s.peek
        if tok.kind == "number":
            self.s.next()
            return _literal(tok, self.ring, self.s)
        if tok.kind == "ident":
            self.s.next()
            if tok.text not in self.ring.index:
                raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.column)
            return self.ring.gen(tok.text)
        if self.s.accept("("):
            inner = self.expr()
            self.s.expect(")")
            return inner
        self.s.fail("expected a number, variable or '('")


@_structured_errors
def parse_polynomial(text: str, ring: GradedRing) -> Polynomial:
    """Parse ``text`` as a polynomial in ``ring``."""
    stream = _Stream(tokenize(text))
    poly = _PolyParser(stream, ring).expr()
    if stream.peek.kind != "eof":
        stream.fail("unexpected trailing input")
    return poly


def _format_coeff(c) -> str:
    if isinstance(c, int):
        return str(c)
    num, den = int(c.numerator), int(c.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def format_monomial(exps, names) -> str:
    parts = []
    for e, name in zip(exps, names):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    """Deterministic text: descending terms, explicit ``*`` and ``^``."""
    if not p.terms:
        return "0"
    names = p.ring.names
    out = []
    for exps, c in p.items():
        mono = format_monomial(exps, names)
        coeff = _format_coeff(c)
        negative = coeff.startswith("-")
        if negative:
            coeff = coeff[1:]
        if not mono:
            body = coeff
        elif coeff == "1":
            body = mono
        else:
            body = f"{coeff}*{mono}"
        if not out:
            out.append("-" + body if negative else body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


# -- rings and sessions -------------------------------------------------------

def _parse_field(s: _Stream) -> Field:
    tok = s.expect_kind("ident", "a coefficient field (QQ or GF(p))")
    if tok.text == "QQ":
        return QQ
    if tok.text == "GF":
        s.expect("(")
        ptok = s.expect_kind("number", "a prime modulus")
        s.expect(")")
        if "/" in ptok.text:
            s.fail("prime modulus must be an integer", ptok)
        try:
            return GF(int(ptok.text))
        except PreconditionError as exc:
            raise ParseError(str(exc), ptok.line, ptok.column) from None
    s.fail("expected a coefficient field (QQ or GF(p))", tok)


def _parse_ring_body(s: _Stream) -> GradedRing:
    fld = _parse_field(s)
    s.expect("[")
    names = []
    first = s.peek
    while True:
        tok = s.expect_kind("ident", "a variable name")
        names.append(tok.text)
        if not s.accept(","):
            break
    s.expect("]")
    order = MonomialOrder.grevlex()
    if s.accept("order"):
        tok = s.expect_kind("ident", "lex or grevlex")
        if tok.text not in ("lex", "grevlex"):
            s.fail("expected lex or grevlex", tok)
        order = MonomialOrder((((tok.text, None)),))
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable name", first.line, first.column)
    return GradedRing(names, fld, order)


@_structured_errors
def parse_ring(text: str) -> GradedRing:
    """Parse a ring descriptor such as ``QQ[x,y,z]`` or ``GF(2)[a,b]``."""
    s = _Stream(tokenize(text))
    ring = _parse_ring_body(s)
    if s.peek.kind != "eof":
        s.fail("unexpected trailing input")
    return ring


@dataclass
class SessionDocument:
    rings: dict[str, GradedRing] = dc_field(default_factory=dict)
    ideals: dict[str, tuple[str, list[Polynomial]]] = dc_field(default_factory=dict)
    polys: dict[str, tuple[str, Polynomial]] = dc_field(default_factory=dict)
    polytopes: dict[str, list[tuple[int, ...]]] = dc_field(default_factory=dict)
    declarations: list[tuple[str, str]] = dc_field(default_factory=list)

    def ideal(self, name: str):
        from .ideal import Ideal
        if name not in self.ideals:
            raise PreconditionError(f"no ideal named {name!r} in session")
        ring_name, gens = self.ideals[name]
        return Ideal(self.rings[ring_name], gens)

    def poly(self, name: str) -> Polynomial:
        if name not in self.polys:
            raise PreconditionError(f"no polynomial named {name!r} in session")
        return self.polys[name][1]

    def polytope(self, name: str):
        from .polytope import LatticePolytope
        if name not in self.polytopes:
            raise PreconditionError(f"no polytope named {name!r} in session")
        return LatticePolytope.from_points(self.polytopes[name])


def _signed_int(s: _Stream) -> int:
    sign = -1 if s.accept("-") else 1
    tok = s.peek
    if tok.kind != "number" or "/" in tok.text:
        s.fail("malformed point: expected an integer coordinate")
    s.next()
    return sign * int(tok.text)


def _parse_point(s: _Stream) -> tuple[int, ...]:
    s.expect("(")
    coords = [_signed_int(s)]
    while s.accept(","):
        coords.append(_signed_int(s))
    if s.peek.text != ")":
        s.fail("malformed point")
    s.next()
    return tuple(coords)


@_structured_errors
def parse_session(text: str) -> SessionDocument:
    """Parse a whole session file into resolved declarations."""
    s = _Stream(tokenize(text))
    doc = SessionDocument()
    current_ring: str | None = None
    taken: set[str] = set()

    while s.peek.kind != "eof":
        kw = s.expect_kind("ident", "a declaration keyword")
        if kw.text not in ("ring", "ideal", "poly", "polytope"):
            s.fail("expected ring, ideal, poly or polytope", kw)
        name_tok = s.expect_kind("ident", "a declaration name")
        name = name_tok.text
        if name in taken:
            raise ParseError(f"duplicate name {name!r}", name_tok.line, name_tok.column)
        taken.add(name)

        if kw.text == "ring":
            s.expect("=")
            doc.rings[name] = _parse_ring_body(s)
            current_ring = name
        elif kw.text in ("ideal", "poly"):
            ring_name = current_ring
            if s.accept("in"):
                rtok = s.expect_kind("ident", "a ring name")
                if rtok.text not in doc.rings:
                    raise ParseError(f"undeclared ring {rtok.text!r}", rtok.line, rtok.column)
                ring_name = rtok.text
            if ring_name is None:
                raise ParseError(f"{kw.text} {name!r} declared before any ring (undeclared ring)",
                                 kw.line, kw.column)
            s.expect("=")
            ring = doc.rings[ring_name]
            parser = _PolyParser(s, ring)
            if kw.text == "poly":
                doc.polys[name] = (ring_name, parser.expr())
            else:
                gens = [parser.expr()]
                while s.accept(","):
                    gens.append(parser.expr())
                doc.ideals[name] = (ring_name, gens)
        else:
            s.expect("=")
            points = [_parse_point(s)]
            while s.peek.text in ("(", ","):
                s.accept(",")
                points.append(_parse_point(s))
            dims = {len(p) for p in points}
            if len(dims) != 1:
                raise ParseError("malformed point: polytope points differ in dimension",
                                 name_tok.line, name_tok.column)
            doc.polytopes[name] = points
        s.expect(";")
        doc.declarations.append((kw.text, name))
    return doc


