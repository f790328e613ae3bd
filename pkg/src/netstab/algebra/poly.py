"""Sparse multivariate polynomials with exact coefficients.

A :class:`Poly` maps exponent tuples to nonzero coefficients. Coefficients are
``int``, :class:`fractions.Fraction` or :class:`~netstab.algebra.field.QuadExt`.
Values are treated as immutable.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .field import QuadExt, field_of, simplify


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, QuadExt):
        c = simplify(c)
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
    return c


def cdiv(a, b):
    """Exact field division of coefficients."""
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return _norm(a / b)


def grlex_key(exp: tuple) -> tuple:
    return (sum(exp), exp)


class Poly:
    __slots__ = ("gens", "terms")

    def __init__(self, terms: Mapping[tuple, object] | None = None, gens: Sequence[str] = ()):
        self.gens = tuple(gens)
        clean = {}
        if terms:
            n = len(self.gens)
            for e, c in terms.items():
                if c:
                    if len(e) != n:
                        raise ValueError(f"exponent {e} does not match {n} variables")
                    clean[tuple(e)] = _norm(c)
        self.terms = clean

    # -- constructors -----------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict, gens: tuple) -> "Poly":
        p = object.__new__(cls)
        p.gens = gens
        p.terms = terms
        return p

    @classmethod
    def const(cls, c, gens: Sequence[str]) -> "Poly":
        return cls({(0,) * len(gens): c}, gens)

    @classmethod
    def zero(cls, gens: Sequence[str]) -> "Poly":
        return cls._raw({}, tuple(gens))

    @classmethod
    def var(cls, name: str, gens: Sequence[str]) -> "Poly":
        gens = tuple(gens)
        e = [0] * len(gens)
        e[gens.index(name)] = 1
        return cls._raw({tuple(e): 1}, gens)

    @classmethod
    def variables(cls, gens: Sequence[str]) -> list["Poly"]:
        return [cls.var(g, gens) for g in gens]

    @classmethod
    def monomial(cls, exp: Sequence[int], gens: Sequence[str], c=1) -> "Poly":
        return cls({tuple(exp): c}, gens)

    # -- basic queries ----------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term; -1 for zero."""
        return min((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var: str | int) -> int:
        i = self._index(var)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, k: int) -> "Poly":
        return Poly._raw({e: c for e, c in self.terms.items() if sum(e) == k}, self.gens)

    def truncate(self, k: int) -> "Poly":
        """Terms of total degree < k."""
        return Poly._raw({e: c for e, c in self.terms.items() if sum(e) < k}, self.gens)

    def coeff(self, exp: Sequence[int]):
        return self.terms.get(tuple(exp), 0)

    def monoms(self) -> list[tuple]:
        """Exponents in decreasing graded-lex order."""
        return sorted(self.terms, key=grlex_key, reverse=True)

    def leading_term(self) -> tuple[tuple, object]:
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def leading_coeff(self):
        return self.leading_term()[1] if self.terms else 0

    def coefficients(self) -> list:
        return [self.terms[e] for e in self.monoms()]

    def field(self) -> int | None:
        return field_of(self.terms.values())

    def _index(self, var) -> int:
        if isinstance(var, int):
            return var
        return self.gens.index(var)

    def _check(self, other: "Poly"):
        if self.gens != other.gens:
            raise ValueError(f"variable mismatch {self.gens} vs {other.gens}")

    # -- arithmetic -------------------------------------------------------
    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.const(other, self.gens)

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = _norm(v)
            else:
                t.pop(e, None)
        return Poly._raw(t, self.gens)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.gens)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not other:
                return Poly.zero(self.gens)
            return Poly._raw({e: _norm(c * other) for e, c in self.terms.items()}, self.gens)
        self._check(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Poly({e: c for e, c in t.items()}, self.gens)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.gens)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        return self * c

    def __truediv__(self, c):
        if isinstance(c, Poly):
            return self.exquo(c)
        return Poly._raw({e: cdiv(v, c) for e, v in self.terms.items()}, self.gens)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.gens == other.gens and self.terms == other.terms
        if self.is_constant():
            return self.constant_term() == other
        return False

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    def exquo(self, other: "Poly") -> "Poly":
        """Exact quotient; raises ValueError when ``other`` does not divide."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        ge, gc = other.leading_term()
        gterms = list(other.terms.items())
        r = dict(self.terms)
        q: dict = {}
        while r:
            re = max(r, key=grlex_key)
            rc = r[re]
            m = tuple(a - b for a, b in zip(re, ge))
            if any(x < 0 for x in m):
                raise ValueError("not divisible")
            f = cdiv(rc, gc)
            q[m] = f
            for e, c in gterms:
                k = tuple(a + b for a, b in zip(e, m))
                v = r.get(k, 0) - f * c
                if v:
                    r[k] = _norm(v)
                else:
                    r.pop(k, None)
        return Poly._raw(q, self.gens)

    def divides(self, other: "Poly") -> bool:
        try:
            other.exquo(self)
        except ValueError:
            return False
        return True

    # -- calculus and substitution -----------------------------------------
    def diff(self, var) -> "Poly":
        i = self._index(var)
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                t[ne] = _norm(c * e[i])
        return Poly._raw(t, self.gens)

    def gradient(self) -> list["Poly"]:
        return [self.diff(i) for i in range(self.nvars)]

    def evaluate(self, point: Sequence) -> object:
        """Value at a point given for all variables."""
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total = total + v
        return _norm(total)

    def compose(self, images: Sequence["Poly"], gens: Sequence[str] | None = None) -> "Poly":
        """Substitute ``images[i]`` for variable ``i``."""
        gens = tuple(gens) if gens is not None else images[0].gens
        powers: list[dict[int, Poly]] = [{0: Poly.const(1, gens)} for _ in images]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = pw(i, k - 1) * images[i]
            return cache[k]

        out = Poly.zero(gens)
        for e, c in self.terms.items():
            term = Poly.const(c, gens)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            out = out + term
        return out

    def subs(self, mapping: Mapping[str, object]) -> "Poly":
        """Substitute scalars or polynomials (same variable list) for variables."""
        images = []
        for g in self.gens:
            if g in mapping:
                v = mapping[g]
                images.append(v if isinstance(v, Poly) else Poly.const(v, self.gens))
            else:
                images.append(Poly.var(g, self.gens))
        return self.compose(images, self.gens)

    def linear_change(self, matrix: Sequence[Sequence]) -> "Poly":
        """f(M x): variable i becomes sum_j M[i][j] x_j."""
        xs = Poly.variables(self.gens)
        images = []
        for row in matrix:
            img = Poly.zero(self.gens)
            for c, x in zip(row, xs):
                if c:
                    img = img + x * c
            images.append(img)
        return self.compose(images, self.gens)

    def translate(self, point: Sequence) -> "Poly":
        """f(x + point)."""
        xs = Poly.variables(self.gens)
        return self.compose([x + p for x, p in zip(xs, point)], self.gens)

    def dehomogenize(self, var) -> "Poly":
        """Set ``var`` = 1 and drop it from the variable list."""
        i = self._index(var)
        gens = self.gens[:i] + self.gens[i + 1:]
        t: dict = {}
        for e, c in self.terms.items():
            ne = e[:i] + e[i + 1:]
            t[ne] = t.get(ne, 0) + c
        return Poly(t, gens)

    def homogenize(self, name: str, degree: int | None = None, position: int | None = None) -> "Poly":
        d = self.degree() if degree is None else degree
        pos = self.nvars if position is None else position
        gens = self.gens[:pos] + (name,) + self.gens[pos:]
        t = {}
        for e, c in self.terms.items():
            k = d - sum(e)
            if k < 0:
                raise ValueError("degree too small to homogenize")
            t[e[:pos] + (k,) + e[pos:]] = c
        return Poly._raw(t, gens)

    def rename(self, gens: Sequence[str]) -> "Poly":
        gens = tuple(gens)
        if len(gens) != self.nvars:
            raise ValueError("rename must keep the variable count")
        return Poly._raw(dict(self.terms), gens)

    def embed(self, gens: Sequence[str]) -> "Poly":
        """Re-express in a larger (or reordered) variable list by name."""
        gens = tuple(gens)
        idx = [gens.index(g) for g in self.gens]
        t = {}
        for e, c in self.terms.items():
            ne = [0] * len(gens)
            for i, k in zip(idx, e):
                ne[i] = k
            t[tuple(ne)] = c
        return Poly._raw(t, gens)

    def drop(self, var) -> "Poly":
        """Remove a variable that does not occur."""
        i = self._index(var)
        if any(e[i] for e in self.terms):
            raise ValueError(f"{self.gens[i]} occurs")
        return Poly._raw({e[:i] + e[i + 1:]: c for e, c in self.terms.items()},
                         self.gens[:i] + self.gens[i + 1:])

    def coeffs_in(self, var) -> dict[int, "Poly"]:
        """Coefficients as polynomials in the remaining variables (same gens)."""
        i = self._index(var)
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            ne = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[ne] = c
        return {k: Poly._raw(t, self.gens) for k, t in out.items()}

    def map_coeffs(self, f) -> "Poly":
        return Poly({e: f(c) for e, c in self.terms.items()}, self.gens)

    def conjugate(self) -> "Poly":
        return self.map_coeffs(lambda c: c.conjugate() if isinstance(c, QuadExt) else c)

    def primitive(self) -> "Poly":
        """Scale to integer coefficients with content 1 and positive leading coefficient."""
        if not self.terms or self.field() is not None:
            return self
        from math import gcd, lcm

        den = 1
        for c in self.terms.values():
            den = lcm(den, Fraction(c).denominator)
        ints = {e: int(Fraction(c) * den) for e, c in self.terms.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        lead = ints[self.leading_term()[0]]
        if lead < 0:
            g = -g
        return Poly._raw({e: v // g for e, v in ints.items()}, self.gens)

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self / self.leading_coeff()

    def __repr__(self):
        return f"Poly({self!s}, gens={self.gens})"

    def __str__(self):
        return format_poly(self)


def format_coeff(c) -> str:
    if isinstance(c, QuadExt):
        return f"({c})"
    return str(c)


def format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for e in p.monoms():
        c = p.terms[e]
        mono = "*".join(
            (g if k == 1 else f"{g}^{k}") for g, k in zip(p.gens, e) if k
        )
        neg = False
        if not isinstance(c, QuadExt) and c < 0:
            neg, c = True, -c
        if mono:
            if c == 1:
                body = mono
            else:
                body = f"{format_coeff(c)}*{mono}"
        else:
            body = format_coeff(c)
        parts.append(("-" if neg else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, b in parts[1:]:
        out += f" {s} {b}"
    return out


def monomials_of_degree(nvars: int, d: int) -> list[tuple]:
    """All exponent tuples of total degree d, decreasing graded-lex."""
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def monomials_below(nvars: int, k: int) -> list[tuple]:
    """All exponent tuples of total degree < k."""
    out = []
    for d in range(k):
        out.extend(monomials_of_degree(nvars, d))
    return out


def poly_from_terms(terms: Iterable[tuple[tuple, object]], gens: Sequence[str]) -> Poly:
    t: dict = {}
    for e, c in terms:
        t[tuple(e)] = t.get(tuple(e), 0) + c
    return Poly(t, gens)
