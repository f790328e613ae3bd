"""GCD, squarefree decomposition and factorization over Q.

These are backed by sympy's polynomial kernel; inputs and outputs stay
:class:`Poly` / :class:`UniPoly`.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from ..errors import Unsupported
from .poly import Poly
from .univariate import UniPoly


def _require_rational(p: Poly):
    if p.field() is not None:
        raise Unsupported("operation is implemented over Q only")


def _symbols(gens):
    return [sympy.Symbol(g) for g in gens]


def to_sympy(p: Poly) -> sympy.Poly:
    _require_rational(p)
    terms = {e: sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
             for e, c in p.terms.items()}
    if not terms:
        terms = {(0,) * p.nvars: sympy.Integer(0)}
    return sympy.Poly.from_dict(terms, *_symbols(p.gens), domain=sympy.QQ)


def from_sympy(sp: sympy.Poly, gens) -> Poly:
    gens = tuple(gens)
    names = [str(g) for g in sp.gens]
    idx = [gens.index(n) for n in names]
    terms = {}
    for e, c in sp.terms():
        ne = [0] * len(gens)
        for i, k in zip(idx, e):
            ne[i] = k
        c = sympy.Rational(c)
        terms[tuple(ne)] = Fraction(int(c.p), int(c.q))
    return Poly(terms, gens)


def gcd_multivar(f: Poly, g: Poly) -> Poly:
    """Primitive gcd with positive leading coefficient (grlex); gcd(0, 0) = 0."""
    f._check(g)
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    return from_sympy(to_sympy(f).gcd(to_sympy(g)), f.gens).primitive()


def gcd_list(polys) -> Poly:
    polys = list(polys)
    g = Poly.zero(polys[0].gens)
    for p in polys:
        g = gcd_multivar(g, p)
        if g.is_constant() and not g.is_zero():
            return Poly.const(1, g.gens)
    return g


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Pairwise coprime squarefree factors with multiplicities (constants dropped)."""
    if f.is_zero():
        raise ValueError("squarefree decomposition of zero")
    _c, parts = to_sympy(f).sqf_list()
    out = []
    for part, m in parts:
        q = from_sympy(part, f.gens).primitive()
        if not q.is_constant():
            out.append((q, m))
    return sorted(out, key=lambda pm: (pm[1], str(pm[0])))


def is_squarefree(f: Poly) -> bool:
    return all(m == 1 for _q, m in squarefree_decomposition(f))


def factor_list(f: Poly) -> list[tuple[Poly, int]]:
    """Irreducible factors over Q (any number of variables)."""
    if f.is_zero():
        raise ValueError("factorization of zero")
    _c, parts = to_sympy(f).factor_list()
    out = [(from_sympy(q, f.gens).primitive(), m) for q, m in parts]
    return sorted([(q, m) for q, m in out if not q.is_constant()], key=lambda pm: (pm[0].degree(), str(pm[0])))


def _uni_to_sympy(f: UniPoly) -> sympy.Poly:
    t = sympy.Symbol("t")
    coeffs = [sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in reversed(f.c)]
    return sympy.Poly(coeffs, t, domain=sympy.QQ)


def _uni_from_sympy(p: sympy.Poly) -> UniPoly:
    return UniPoly([Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q))
                    for c in reversed(p.all_coeffs())])


def factor_rational_univariate(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic irreducible factors over Q with multiplicities, any degree."""
    if f.degree < 1:
        return []
    _c, parts = _uni_to_sympy(f).factor_list()
    out = [(_uni_from_sympy(q).monic(), m) for q, m in parts]
    return sorted(out, key=lambda pm: (pm[0].degree, [Fraction(x) for x in pm[0].c]))


def factor_univariate_deg_le4(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Irreducible factorization over Q, limited to squarefree parts of degree <= 4."""
    if f.degree < 1:
        return []
    _c, parts = _uni_to_sympy(f).sqf_list()
    for part, _m in parts:
        if part.degree() > 4:
            raise Unsupported(f"squarefree part of degree {part.degree()} > 4")
    return factor_rational_univariate(f)
