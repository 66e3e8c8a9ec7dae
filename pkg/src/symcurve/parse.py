"""Curve-file parser and canonical printer.

A curve file holds definitions ``name(t) = expr``; ``x`` and ``y`` are
required and earlier definitions may be referenced as ``name(t)``.  A line
that does not start a new definition continues the previous one.  Grammar::

    expr   := ["+"|"-"] term (("+"|"-") term)*
    term   := unary (("*" | "/" | <juxtaposition>) unary)*
    unary  := "-" unary | power
    power  := atom ("^" uint)?
    atom   := int | decimal | "sqrt" "(" uint ")" | "t" | name "(t)" | "(" expr ")"

``-t^2`` is ``-(t^2)``; ``2t^3`` is ``2*(t^3)``.  Division is allowed only by
nonzero constants.  Decimal literals are read as exact rationals
(``0.25`` is 1/4, never a float).
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction

from .curve import Parametrization
from .errors import CurveParseError, DegreeOverflowError, UnsupportedConstantError
from .field import FieldElement
from .poly import RealPoly

DEFAULT_DEGREE_CAP = 10000

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<num>\d+\.\d*|\.\d+|\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<pow>\*\*|\^)
  | (?P<op>[-+*/()=])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def degree_cap() -> int:
    raw = os.environ.get("SYMCURVE_DEGREE_CAP")
    if raw is None:
        return DEFAULT_DEGREE_CAP
    try:
        return int(raw)
    except ValueError:
        raise CurveParseError(f"SYMCURVE_DEGREE_CAP must be an integer, got {raw!r}")


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise CurveParseError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        kind = m.lastgroup
        if kind == "nl":
            out.append(Token("nl", "\n", line, pos - line_start + 1))
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            out.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    out.append(Token("eof", "", line, pos - line_start + 1))
    return out


class _Parser:
    def __init__(self, tokens: list[Token], env: dict[str, RealPoly], cap: int):
        self.toks = [t for t in tokens if t.kind != "nl"]
        self.i = 0
        self.env = env
        self.cap = cap

    # -- helpers --
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None, cls=CurveParseError):
        tok = tok or self.tok
        return cls(msg, tok.line, tok.col)

    def accept(self, text: str) -> Token | None:
        if self.tok.text == text and self.tok.kind in ("op", "pow", "name"):
            t = self.tok
            self.i += 1
            return t
        return None

    def expect(self, text: str) -> Token:
        t = self.accept(text)
        if t is None:
            shown = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {shown!r}")
        return t

    def check_degree(self, deg: int, tok: Token):
        if deg > self.cap:
            raise self.error(
                f"expanded degree {deg} exceeds the cap {self.cap} "
                "(set SYMCURVE_DEGREE_CAP to raise it)",
                tok,
                DegreeOverflowError,
            )

    # -- grammar --
    def expr(self) -> RealPoly:
        neg = False
        if self.accept("-"):
            neg = True
        else:
            self.accept("+")
        acc = self.term()
        if neg:
            acc = -acc
        while True:
            if self.accept("+"):
                acc = acc + self.term()
            elif self.accept("-"):
                acc = acc - self.term()
            else:
                return acc

    def _starts_atom(self) -> bool:
        t = self.tok
        return t.kind == "name" or (t.kind == "op" and t.text == "(")

    def term(self) -> RealPoly:
        acc = self.unary()
        while True:
            t = self.tok
            if self.accept("*"):
                rhs = self.unary()
            elif self.accept("/"):
                rhs = self.unary()
                if rhs.degree > 0:
                    raise self.error("division by a non-constant expression", t)
                if rhs.is_zero():
                    raise self.error("division by zero", t)
                acc = acc.scale(rhs.coeff(0).inverse())
                continue
            elif self._starts_atom():
                rhs = self.unary()
            else:
                return acc
            if not acc.is_zero() and not rhs.is_zero():
                self.check_degree(acc.degree + rhs.degree, t)
            acc = acc * rhs

    def unary(self) -> RealPoly:
        if self.accept("-"):
            return -self.unary()
        return self.power()

    def power(self) -> RealPoly:
        base = self.atom()
        t = self.tok
        if t.kind == "pow":
            self.i += 1
            e = self.tok
            if e.kind != "num" or not e.text.isdigit():
                raise self.error("exponent must be a non-negative integer literal", e)
            self.i += 1
            k = int(e.text)
            if base.degree > 0:
                self.check_degree(base.degree * k, t)
            return base ** k
        return base

    def atom(self) -> RealPoly:
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return RealPoly([Fraction(t.text)])
        if t.kind == "op" and t.text == "(":
            self.i += 1
            inner = self.expr()
            self.expect(")")
            return inner
        if t.kind == "name":
            self.i += 1
            if t.text == "t":
                return RealPoly([0, 1])
            if t.text == "sqrt":
                self.expect("(")
                arg = self.tok
                if arg.kind != "num" or not arg.text.isdigit():
                    raise self.error(
                        "sqrt takes a non-negative integer literal", arg, UnsupportedConstantError
                    )
                self.i += 1
                self.expect(")")
                n = int(arg.text)
                return RealPoly([FieldElement.sqrt(n) if n else 0])
            if t.text in self.env and self.tok.text == "(":
                self.expect("(")
                self.expect("t")
                self.expect(")")
                return self.env[t.text]
            if t.text in self.env:
                raise self.error(f"write {t.text}(t) to use a defined expression", t)
            raise self.error(f"unsupported constant or name {t.text!r}", t, UnsupportedConstantError)
        shown = t.text or "end of input"
        raise self.error(f"unexpected {shown!r}")

    def finish(self):
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}")


def _split_definitions(tokens: list[Token]) -> list[list[Token]]:
    groups: list[list[Token]] = []
    current: list[Token] = []
    at_line_start = True
    for k, tok in enumerate(tokens):
        if tok.kind == "nl":
            at_line_start = True
            continue
        if tok.kind == "eof":
            break
        starts = (
            at_line_start
            and tok.kind == "name"
            and [x.text for x in tokens[k + 1 : k + 5]] == ["(", "t", ")", "="]
        )
        if starts and current:
            groups.append(current)
            current = []
        if at_line_start and not starts and not current:
            raise CurveParseError("expected a definition 'name(t) = ...'", tok.line, tok.col)
        current.append(tok)
        at_line_start = False
    if current:
        groups.append(current)
    return groups


def parse_definitions(text: str, cap: int | None = None) -> dict[str, RealPoly]:
    cap = degree_cap() if cap is None else cap
    env: dict[str, RealPoly] = {}
    for group in _split_definitions(tokenize(text)):
        name = group[0]
        end = group[-1]
        body = group[5:] + [Token("eof", "", end.line, end.col + len(end.text))]
        if len(body) == 1:
            raise CurveParseError(f"empty definition of {name.text}", name.line, name.col)
        if name.text in env:
            raise CurveParseError(f"{name.text} defined twice", name.line, name.col)
        if name.text in ("t", "sqrt"):
            raise CurveParseError(f"{name.text!r} is reserved", name.line, name.col)
        p = _Parser(body, env, cap)
        env[name.text] = p.expr()
        p.finish()
    return env


def parse_curve(text: str, cap: int | None = None) -> Parametrization:
    env = parse_definitions(text, cap)
    missing = [n for n in ("x", "y") if n not in env]
    if missing:
        raise CurveParseError(f"missing definition(s): {', '.join(missing)}")
    return Parametrization(env["x"], env["y"])


def parse_constant(text: str) -> FieldElement:
    """Parse a constant expression such as ``"1/2 + 3/4*sqrt(2)"``."""
    toks = [t for t in tokenize(text) if t.kind != "nl"]
    p = _Parser(toks, {}, DEFAULT_DEGREE_CAP)
    value = p.expr()
    p.finish()
    if value.degree > 0:
        raise CurveParseError(f"{text!r} is not a constant")
    return value.coeff(0)


# -- printing -----------------------------------------------------------------


def _monomial(k: int) -> str:
    return "" if k == 0 else ("t" if k == 1 else f"t^{k}")


def format_poly(p: RealPoly) -> str:
    """Canonical expanded form, ascending powers; re-parses to ``p``."""
    if p.is_zero():
        return "0"
    pieces: list[tuple[str, str]] = []
    for k, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        mono = _monomial(k)
        terms = c.terms
        if len(terms) == 1:
            (key, q), = terms.items()
            sign = "-" if q < 0 else "+"
            body = FieldElement({key: abs(q)}).to_str()
            if mono:
                body = mono if body == "1" else f"{body}*{mono}"
        else:
            sign = "+"
            body = f"({c.to_str()})"
            if mono:
                body = f"{body}*{mono}"
        pieces.append((sign, body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_curve(p: Parametrization) -> str:
    return f"x(t) = {format_poly(p.x)}\ny(t) = {format_poly(p.y)}\n"
