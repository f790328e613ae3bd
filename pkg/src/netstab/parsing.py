"""Polynomial expressions and input documents.

Grammar (explicit ``*`` only)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*      division by constants only
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | IDENT | "sqrt" "(" ["-"] INT ")" | "(" expr ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra.field import QuadExt, squarefree_part
from .algebra.poly import Poly
from .errors import NonHomogeneous, ParseError, PolySyntaxError, UnknownVariable

AMBIENTS = {
    "P3": ("x0", "x1", "x2", "x3"),
    "P2": ("x", "y", "z"),
    "disc": ("l", "m", "n"),
}

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    toks, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("id", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", m.start(3))
            toks.append(("op", ch, m.start(3)))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, gens: Sequence[str]):
        self.toks = _tokenize(text)
        self.i = 0
        self.gens = tuple(gens)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise PolySyntaxError(f"expected {op!r}", pos)

    def const(self, c) -> Poly:
        return Poly.const(c, self.gens)

    def expr(self) -> Poly:
        acc = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            _k, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
                continue
            if rhs.degree() > 0:
                raise PolySyntaxError("division by a non-constant", pos)
            c = rhs.coeff((0,) * len(self.gens))
            if not c:
                raise PolySyntaxError("division by zero", pos)
            acc = acc * self.const(1 / Fraction(c) if not isinstance(c, QuadExt) else 1 / c)
        return acc

    def unary(self) -> Poly:
        kind, val, _pos = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            p = self.unary()
            return -p if val == "-" else p
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                raise PolySyntaxError("exponent must be a nonnegative integer", pos)
            return base ** val
        return base

    def atom(self) -> Poly:
        kind, val, pos = self.take()
        if kind == "num":
            return self.const(val)
        if kind == "id":
            if val in self.gens:
                return Poly.var(val, self.gens)
            if val == "sqrt":
                self.expect("(")
                sign = 1
                if self.peek()[0] == "op" and self.peek()[1] == "-":
                    self.take()
                    sign = -1
                k, d, p2 = self.take()
                if k != "num":
                    raise PolySyntaxError("sqrt takes an integer", p2)
                self.expect(")")
                d *= sign
                if d == 0 or squarefree_part(d) != d:
                    raise PolySyntaxError("sqrt needs a squarefree integer other than 0, 1", p2)
                return self.const(1 if d == 1 else QuadExt.sqrt(d))
            raise UnknownVariable(f"unknown variable {val!r}", pos)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            raise PolySyntaxError("unexpected end of input", pos)
        raise PolySyntaxError(f"unexpected {val!r}", pos)


def _gens(ambient) -> tuple[str, ...]:
    if isinstance(ambient, str):
        try:
            return AMBIENTS[ambient]
        except KeyError:
            raise ValueError(f"unknown ambient {ambient!r}") from None
    return tuple(ambient)


def parse_polynomial(text: str, ambient="P3", degree: int | None = None) -> Poly:
    """Exact parse over the ambient's variables; with ``degree`` the result
    must be a form of exactly that degree (the zero form is accepted)."""
    p = _Parser(text, _gens(ambient))
    out = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise PolySyntaxError(f"unexpected {val!r}", pos)
    if degree is not None and not out.is_zero():
        if not out.is_homogeneous() or out.degree() != degree:
            raise NonHomogeneous(f"expected a form of degree {degree}")
    return out


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise PolySyntaxError(f"not a rational number: {text.strip()!r}") from None


def parse_vector(text: str) -> list[Fraction]:
    """'a,b,c' or '(a:b:c)'."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    parts = re.split(r"[,:]", s)
    return [parse_rational(x) for x in parts]


def parse_int_vector(text: str) -> list[int]:
    out = parse_vector(text)
    if any(x.denominator != 1 for x in out):
        raise PolySyntaxError(f"expected integers: {text.strip()!r}")
    return [int(x) for x in out]


def parse_matrix(text: str) -> list[list[Fraction]]:
    """Rows separated by ';', entries by ','."""
    rows = [parse_vector(r) for r in text.split(";") if r.strip()]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise PolySyntaxError("ragged matrix")
    return rows


@dataclass
class InputDocument:
    """``name = expr`` declarations plus an optional ``field sqrt D`` directive.
    The names ``point``, ``lambda`` and ``g`` hold a point, a weight vector and
    a matrix; every other name holds a polynomial expression."""

    forms: dict[str, str] = field(default_factory=dict)
    point: list[Fraction] | None = None
    lam: list[int] | None = None
    g: list[list[Fraction]] | None = None
    field_d: int | None = None
    lines: dict[str, int] = field(default_factory=dict)

    def polys(self, ambient="P3", degree: int | None = None,
              names: Sequence[str] | None = None) -> list[Poly]:
        out = []
        for name in (names if names is not None else self.forms):
            if name not in self.forms:
                raise ParseError(f"missing declaration {name!r}")
            try:
                out.append(parse_polynomial(self.forms[name], ambient, degree))
            except ParseError as exc:
                err = type(exc)(f"{name} (line {self.lines[name]}): {exc}")
                err.offset = exc.offset
                raise err from None
        return out


def parse_field(text: str) -> int:
    """'sqrt -1', 'sqrt:-1' or '-1' -> -1."""
    s = text.strip()
    if s.startswith("sqrt"):
        s = s[4:].lstrip(" :")
    try:
        d = int(s)
    except ValueError:
        raise PolySyntaxError(f"bad field directive {text!r}") from None
    if d in (0, 1):
        raise PolySyntaxError("field directive needs d not 0 or 1")
    return d


def parse_document(text: str) -> InputDocument:
    doc = InputDocument()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("field"):
            if doc.field_d is not None:
                raise PolySyntaxError(f"line {lineno}: field declared twice")
            doc.field_d = parse_field(line[5:])
            continue
        if "=" not in line:
            raise PolySyntaxError(f"line {lineno}: expected 'name = expr'")
        name, expr = (s.strip() for s in line.split("=", 1))
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise PolySyntaxError(f"line {lineno}: bad name {name!r}")
        if name in doc.lines:
            raise PolySyntaxError(f"line {lineno}: {name!r} declared twice")
        doc.lines[name] = lineno
        if name == "point":
            doc.point = parse_vector(expr)
        elif name == "lambda":
            doc.lam = parse_int_vector(expr)
        elif name == "g":
            doc.g = parse_matrix(expr)
        else:
            doc.forms[name] = expr
    return doc
