"""Resultants and exact solving of zero-dimensional projective systems.

The solver finds every common zero defined over Q or over a quadratic field
Q(sqrt d).  Zeros over larger fields are not constructed; the irreducible
eliminant factors that carry them are returned as residual certificates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import DegenerateResultant, Unsupported
from .factor import factor_rational_univariate, gcd_list
from .field import field_of
from .linalg import det_poly_matrix, matvec
from .points import ProjPoint
from .poly import Poly, _norm
from .univariate import UniPoly, gcd_many, quadratic_roots

ATTEMPTS = 6


def sylvester_matrix(f: Poly, g: Poly, var) -> list[list[Poly]]:
    i = f._index(var)
    m, n = f.degree_in(i), g.degree_in(i)
    cf, cg = f.coeffs_in(i), g.coeffs_in(i)
    zero = Poly.zero(f.gens)
    size = m + n
    rows = []
    for r in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[r + m - k] = cf.get(k, zero)
        rows.append(row)
    for r in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[r + n - k] = cg.get(k, zero)
        rows.append(row)
    return rows


def resultant(f: Poly, g: Poly, var) -> Poly:
    """Sylvester resultant with respect to ``var``; the result keeps the same
    variable list (``var`` no longer occurs)."""
    f._check(g)
    i = f._index(var)
    m, n = f.degree_in(i), g.degree_in(i)
    if m <= 0 and n <= 0:
        raise DegenerateResultant(f"both polynomials are constant in {f.gens[i]}")
    if f.is_zero() or g.is_zero():
        return Poly.zero(f.gens)
    if m == 0:
        return f ** n
    if n == 0:
        return g ** m
    return det_poly_matrix(sylvester_matrix(f, g, i))


@dataclass
class Solution:
    """Common zeros of a homogeneous system.

    ``finite`` is False when the zero set is positive-dimensional; ``points``
    is then empty.  ``residual`` holds monic irreducible eliminant factors of
    degree > 2 over Q, in the solver's internal projected coordinate.
    """

    points: list[ProjPoint] = field(default_factory=list)
    residual: list[UniPoly] = field(default_factory=list)
    finite: bool = True

    def residual_strings(self) -> list[str]:
        return [format_unipoly(r) for r in self.residual]


def format_unipoly(u: UniPoly, name: str = "t") -> str:
    return str(u.to_poly((name,)))


class _NonGeneric(Exception):
    """The random projection was not generic for this system."""


def _unimodular(n: int, rng: random.Random) -> list[list[int]]:
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        k = rng.choice([-3, -2, -1, 1, 2, 3])
        M[i] = [a + k * b for a, b in zip(M[i], M[j])]
    return M


def _combos(polys: Sequence[Poly], count: int, rng: random.Random) -> list[tuple[Poly, Poly]]:
    if len({p.degree() for p in polys}) != 1:
        raise ValueError("solver expects forms of equal degree")
    if len(polys) == 2:
        return [(polys[0], polys[1])]

    def comb():
        out = Poly.zero(polys[0].gens)
        for p in polys:
            out = out + p * rng.randint(-9, 9)
        return out

    return [(comb(), comb()) for _ in range(count)]


def _restrict(p: Poly, values: Sequence, last: int) -> UniPoly:
    """Univariate polynomial in the variable ``last`` after fixing the others."""
    coeffs: dict[int, object] = {}
    for e, c in p.terms.items():
        v = c
        for j, k in enumerate(e):
            if j != last and k:
                v = v * values[j] ** k
        coeffs[e[last]] = coeffs.get(e[last], 0) + v
    top = max(coeffs, default=-1)
    return UniPoly([coeffs.get(k, 0) for k in range(top + 1)])


def _roots_in_field(u: UniPoly, base: int | None) -> list:
    """All roots of ``u`` lying in Q(sqrt base) or, if base is None, in Q or a
    quadratic field.  Raises _NonGeneric if some root lies elsewhere."""
    if u.degree <= 0:
        return []
    coeffs_field = field_of(u.c)
    if coeffs_field is None:
        out = []
        for fac, _m in factor_rational_univariate(u):
            if fac.degree == 1:
                out.append(_norm(-fac.c[0]))
            elif fac.degree == 2:
                roots = quadratic_roots(fac)
                if base is not None and field_of(roots) != base:
                    raise _NonGeneric
                out.extend(roots)
            else:
                raise _NonGeneric
        return out
    u = u.monic()
    if u.degree == 1:
        return [_norm(-u.c[0])]
    if u.degree == 2:
        roots = quadratic_roots(u)
        if roots and all(field_of([r]) in (None, coeffs_field) for r in roots):
            return roots
    raise _NonGeneric


def _lift(moved: Sequence[Poly], partial: Sequence, last: int) -> list[tuple]:
    """Extend a zero of the projected system by the coordinate ``last``."""
    vals = list(partial)
    g = gcd_many([_restrict(p, vals + [0], last) for p in moved])
    base = field_of(vals)
    out = []
    for r in _roots_in_field(g, base):
        if base is not None and field_of([r]) not in (None, base):
            raise _NonGeneric
        out.append(tuple(vals) + (r,))
    return out


def _binary_eliminant(moved: Sequence[Poly], rng: random.Random) -> tuple[UniPoly, bool]:
    """gcd of resultants in the last variable, dehomogenized at the middle one.

    Returns the univariate eliminant in the first variable and whether the
    direction (1:0) also carries zeros.
    """
    a, b, c = moved[0].gens
    results = []
    at_infinity = True
    for u, v in _combos(moved, 3, rng):
        full = u.degree() * v.degree()
        r = resultant(u.dehomogenize(b), v.dehomogenize(b), c)
        ur = UniPoly.from_poly(r.drop(c) if c in r.gens else r, 0)
        results.append(ur)
        if ur.degree == full:
            at_infinity = False
    return gcd_many(results), at_infinity


def solve_plane(polys: Sequence[Poly], seed: int = 0) -> Solution:
    """Common zeros in P^2 of ternary forms with rational coefficients."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return Solution(finite=False)
    for p in polys:
        if p.field() is not None:
            raise Unsupported("the solver expects rational coefficients")
    if not gcd_list(polys).is_constant():
        return Solution(finite=False)
    if len(polys) == 1:
        # a single curve in the plane
        return Solution(finite=False)
    rng = random.Random(seed)
    for _attempt in range(ATTEMPTS):
        M = _unimodular(3, rng)
        moved = [p.linear_change(M) for p in polys]
        if any(not p.coeff((0, 0, p.degree())) for p in moved):
            continue
        G, at_inf = _binary_eliminant(moved, rng)
        if G.is_zero():
            continue
        try:
            points, residual = [], []
            for fac, _m in factor_rational_univariate(G):
                if fac.degree == 1:
                    roots = [_norm(-fac.c[0])]
                elif fac.degree == 2:
                    roots = quadratic_roots(fac)
                else:
                    residual.append(fac)
                    continue
                for t in roots:
                    points.extend(_lift(moved, (t, 1), 2))
            if at_inf:
                points.extend(_lift(moved, (1, 0), 2))
        except _NonGeneric:
            continue
        return Solution(_unique([ProjPoint(matvec(M, list(q))) for q in points]), residual, True)
    raise Unsupported("no generic projection found for the system")


def solve_space(polys: Sequence[Poly], seed: int = 0) -> Solution:
    """Common zeros in P^3 of quaternary forms with rational coefficients."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return Solution(finite=False)
    for p in polys:
        if p.field() is not None:
            raise Unsupported("the solver expects rational coefficients")
    if len(polys) < 3 or not gcd_list(polys).is_constant():
        return Solution(finite=False)
    rng = random.Random(seed)
    gens = polys[0].gens
    for _attempt in range(ATTEMPTS):
        M = _unimodular(4, rng)
        moved = [p.linear_change(M) for p in polys]
        if any(not p.coeff((0, 0, 0, p.degree())) for p in moved):
            continue
        ternary = []
        for u, v in _combos(moved, 3, rng):
            r = resultant(u, v, gens[3])
            if not r.is_zero():
                ternary.append(r.drop(gens[3]))
        if not ternary:
            return Solution(finite=False)
        plane = solve_plane(ternary, seed=rng.randrange(1 << 30))
        if not plane.finite:
            return Solution(finite=False)
        try:
            points = []
            for q in plane.points:
                points.extend(_lift(moved, q.coords, 3))
        except _NonGeneric:
            continue
        return Solution(_unique([ProjPoint(matvec(M, list(q))) for q in points]), plane.residual, True)
    raise Unsupported("no generic projection found for the system")


def solve_projective(polys: Sequence[Poly], seed: int = 0) -> Solution:
    n = polys[0].nvars
    if n == 3:
        return solve_plane(polys, seed)
    if n == 4:
        return solve_space(polys, seed)
    raise Unsupported(f"projective solving in {n - 1} dimensions")


def _unique(points: list[ProjPoint]) -> list[ProjPoint]:
    seen = {}
    for p in points:
        seen.setdefault(p, None)
    return sorted(seen, key=ProjPoint.sort_key)


__all__ = ["resultant", "sylvester_matrix", "Solution", "solve_plane", "solve_space",
           "solve_projective"]
