"""Dense univariate polynomials over Q or Q(sqrt d)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .field import QuadExt, field_of, inv, rational_sqrt, squarefree_part
from .poly import Poly, _norm


class UniPoly:
    """Coefficients stored low degree first; no trailing zeros."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Sequence = ()):
        c = [_norm(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = c

    @classmethod
    def from_poly(cls, p: Poly, var=0) -> "UniPoly":
        i = p._index(var)
        if any(k for e in p.terms for j, k in enumerate(e) if j != i):
            raise ValueError("polynomial is not univariate in the requested variable")
        deg = p.degree_in(i)
        c = [0] * (deg + 1)
        for e, v in p.terms.items():
            c[e[i]] = v
        return cls(c)

    def to_poly(self, gens: Sequence[str], var=0) -> Poly:
        i = var if isinstance(var, int) else list(gens).index(var)
        t = {}
        for k, v in enumerate(self.c):
            if v:
                e = [0] * len(gens)
                e[i] = k
                t[tuple(e)] = v
        return Poly(t, gens)

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lc(self):
        return self.c[-1] if self.c else 0

    def __add__(self, o: "UniPoly") -> "UniPoly":
        n = max(len(self.c), len(o.c))
        return UniPoly([(self.c[i] if i < len(self.c) else 0) + (o.c[i] if i < len(o.c) else 0)
                        for i in range(n)])

    def __neg__(self):
        return UniPoly([-x for x in self.c])

    def __sub__(self, o: "UniPoly") -> "UniPoly":
        return self + (-o)

    def __mul__(self, o):
        if not isinstance(o, UniPoly):
            return UniPoly([x * o for x in self.c])
        if not self.c or not o.c:
            return UniPoly()
        out = [0] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, UniPoly) and self.c == o.c

    def __hash__(self):
        return hash(tuple(self.c))

    def divmod(self, o: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if not o.c:
            raise ZeroDivisionError
        r = list(self.c)
        q = [0] * max(len(r) - len(o.c) + 1, 0)
        il = inv(o.lc())
        for k in range(len(r) - len(o.c), -1, -1):
            f = _norm(r[k + len(o.c) - 1] * il)
            q[k] = f
            if f:
                for j, b in enumerate(o.c):
                    r[k + j] = r[k + j] - f * b
        return UniPoly(q), UniPoly(r[: len(o.c) - 1])

    def __floordiv__(self, o):
        return self.divmod(o)[0]

    def __mod__(self, o):
        return self.divmod(o)[1]

    def monic(self) -> "UniPoly":
        if not self.c:
            return self
        return self * inv(self.lc())

    def derivative(self) -> "UniPoly":
        return UniPoly([k * self.c[k] for k in range(1, len(self.c))])

    def __call__(self, x):
        v = 0
        for a in reversed(self.c):
            v = v * x + a
        return _norm(v)

    def valuation(self) -> int:
        """Order of vanishing at 0 (-1 for the zero polynomial)."""
        for k, a in enumerate(self.c):
            if a:
                return k
        return -1

    def __repr__(self):
        return f"UniPoly({self.c})"


def gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while b.c:
        a, b = b, a % b
    return a.monic()


def gcd_many(polys: Sequence[UniPoly]) -> UniPoly:
    g = UniPoly()
    for p in polys:
        g = gcd(g, p)
    return g


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm over a field of characteristic zero."""
    if f.degree < 1:
        return []
    out = []
    fp = f.derivative()
    a = gcd(f, fp)
    b = f // a
    c = fp // a
    d = c - b.derivative()
    i = 1
    while b.degree >= 1:
        a = gcd(b, d)
        if a.degree >= 1:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


def root_multiplicities(f: UniPoly) -> list[int]:
    """Multiplicities of the distinct roots over the algebraic closure."""
    out = []
    for part, m in squarefree_decomposition(f):
        out.extend([m] * part.degree)
    return sorted(out, reverse=True)


def quadratic_roots(f: UniPoly) -> list:
    """Both roots of a degree-2 polynomial over Q or Q(sqrt d), when they lie in
    Q or in a quadratic extension of Q; otherwise an empty list."""
    c0, c1, c2 = f.c
    disc = _norm(c1 * c1 - 4 * c2 * c0)
    base = field_of(f.c)
    if base is not None and not isinstance(disc, QuadExt):
        disc = QuadExt(disc, 0, base)
    if isinstance(disc, QuadExt):
        root = sqrt_in_field(disc)
        if root is None:
            return []
    else:
        disc = Fraction(disc)
        r = rational_sqrt(disc)
        if r is not None:
            root = r
        else:
            num = disc.numerator * disc.denominator
            d = squarefree_part(num)
            s = rational_sqrt(Fraction(num, d)) / disc.denominator
            root = QuadExt(0, s, d)
    two_a = 2 * c2
    return [_norm((-c1 + root) / two_a), _norm((-c1 - root) / two_a)]


def sqrt_in_field(x: QuadExt):
    """Square root of x inside its own field Q(sqrt d), or None."""
    if x.b == 0:
        r = rational_sqrt(x.a)
        if r is not None:
            return r
        # a = d * s^2 has root s*sqrt(d)
        r = rational_sqrt(x.a / x.d)
        return QuadExt(0, r, x.d) if r is not None else None
    # (p + q sqrt d)^2 = p^2 + d q^2 + 2pq sqrt d; p^2 solves p^4 - a p^2 + d b^2/4 = 0
    n = x.norm()
    rn = rational_sqrt(n)
    if rn is None:
        return None
    for s in (rn, -rn):
        p2 = (x.a + s) / 2
        p = rational_sqrt(p2)
        if p is not None and p != 0:
            q = x.b / (2 * p)
            return QuadExt(p, q, x.d)
    return None


def rational_roots(f: UniPoly) -> list[Fraction]:
    """Distinct rational roots of a polynomial with rational coefficients."""
    from .factor import factor_rational_univariate

    out = []
    for fac, _m in factor_rational_univariate(f):
        if fac.degree == 1:
            out.append(Fraction(-fac.c[0]) / Fraction(fac.c[1]))
    return sorted(out)
