"""Scalars: rationals (``fractions.Fraction``) and elements of Q(sqrt d)."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational

from sympy.ntheory.factor_ import core

from ..errors import FieldMismatch


def squarefree_part(n: int) -> int:
    """Signed squarefree part of a nonzero integer."""
    if n == 0:
        raise ValueError("squarefree part of 0")
    sign = -1 if n < 0 else 1
    return sign * int(core(abs(n), 2))


def rational_sqrt(q) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


class QuadExt:
    """a + b*sqrt(d) with a, b rational and d a squarefree integer != 0, 1."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if d in (0, 1):
            raise ValueError("d must not be 0 or 1")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    @classmethod
    def sqrt(cls, d: int) -> "QuadExt":
        return cls(0, 1, d)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldMismatch(f"sqrt({self.d}) vs sqrt({other.d})")
            return other
        if isinstance(other, Rational):
            return QuadExt(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            return QuadExt(self.a * other, self.b * other, self.d)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in quadratic field")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError
            return QuadExt(self.a / other, self.b / other, self.d)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, Rational):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})"
        tail = root if self.b == 1 else f"-{root}" if self.b == -1 else f"{self.b}*{root}"
        if self.a == 0:
            return tail
        return f"{self.a}+{tail}" if not tail.startswith("-") else f"{self.a}{tail}"


def is_rational(c) -> bool:
    return not isinstance(c, QuadExt) or c.b == 0


def simplify(c):
    """Collapse a rational-valued QuadExt to a Fraction; ints stay ints."""
    if isinstance(c, QuadExt):
        return c.a if c.b == 0 else c
    return c


def field_of(values) -> int | None:
    """The common d of the QuadExt entries (None if all rational)."""
    d = None
    for v in values:
        if isinstance(v, QuadExt) and v.b != 0:
            if d is None:
                d = v.d
            elif d != v.d:
                raise FieldMismatch(f"sqrt({d}) vs sqrt({v.d})")
    return d


def conjugate(c):
    return c.conjugate() if isinstance(c, QuadExt) else c


def inv(c):
    if isinstance(c, QuadExt):
        return c.inverse()
    return Fraction(1) / c
